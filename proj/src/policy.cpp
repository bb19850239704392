#include "arena/policy.hpp"

#include <algorithm>
#include <map>

namespace arena {

namespace {

bool in_history(const Claim& claim, std::span<const VisibleClue> history) {
  return std::any_of(history.begin(), history.end(), [&](const VisibleClue& c) {
    return c.claim.has_value() && *c.claim == claim;
  });
}

// Shared scan: true unambiguous claims passing `admit`, rotated by seed,
// first one absent from history wins.
template <typename Admit>
ClueChoice pick_claim(const Scene& scene, std::span<const VisibleClue> history,
                      std::uint64_t seed, Admit admit) {
  std::vector<Claim> candidates;
  for (Claim& claim : enumerate_candidate_claims(scene)) {
    if (evaluate(claim, scene) == Truth::True && admit(claim)) {
      candidates.push_back(std::move(claim));
    }
  }
  if (candidates.empty()) {
    return ClueChoice{std::nullopt, false};
  }
  const std::size_t n = candidates.size();
  const std::size_t start = static_cast<std::size_t>(seed % n);
  for (std::size_t k = 0; k < n; ++k) {
    const Claim& claim = candidates[(start + k) % n];
    if (!in_history(claim, history)) {
      return ClueChoice{claim, false};
    }
  }
  // Space exhausted: repeat the least recent claim that is still true here.
  for (const VisibleClue& c : history) {
    if (c.claim.has_value() && evaluate(*c.claim, scene) == Truth::True && admit(*c.claim)) {
      return ClueChoice{*c.claim, true};
    }
  }
  return ClueChoice{candidates[start], true};
}

PolicyResponse clue_response(const ClueChoice& choice) {
  PolicyResponse response;
  ClueAction action;
  if (choice.claim.has_value()) {
    action.claim = choice.claim;
    action.text = render(*choice.claim);
    response.raw_text = "\\boxed{" + action.text + "}";
  } else {
    response.parse_error = true;
  }
  response.action = std::move(action);
  return response;
}

}  // namespace

ClueChoice honest_civilian_clue(const Scene& scene, std::span<const VisibleClue> history,
                                std::uint64_t seed) {
  return pick_claim(scene, history, seed, [](const Claim&) { return true; });
}

ClueChoice naive_spy_clue(const Scene& spy_scene, std::span<const VisibleClue> history,
                          std::uint64_t seed) {
  return pick_claim(spy_scene, history, seed, [](const Claim&) { return true; });
}

SpyClueChoice oracle_spy_clue(const Scene& spy_scene, const ChangeLog& change_log,
                              std::span<const VisibleClue> history, std::uint64_t seed) {
  auto oracle_safe = [&](const Claim& claim) {
    for (const ObjectChange& change : change_log.entries) {
      if (mentions_shape(claim, change.shape_before) ||
          mentions_shape(claim, change.shape_after) ||
          mentions_color(claim, change.color_before) ||
          mentions_color(claim, change.color_after)) {
        return false;
      }
      for (int id : referenced_ids(claim, spy_scene)) {
        if (id == change.id) return false;
      }
    }
    return true;
  };

  const ClueChoice safe = pick_claim(spy_scene, history, seed, oracle_safe);
  if (safe.claim.has_value()) {
    return SpyClueChoice{safe.claim, safe.repeated, false};
  }
  const ClueChoice naive = naive_spy_clue(spy_scene, history, seed);
  return SpyClueChoice{naive.claim, naive.repeated, true};
}

std::optional<int> consistency_vote(const Scene& scene, std::span<const VisibleClue> transcript,
                                    int self_seat) {
  std::map<int, int> inconsistent;
  for (const VisibleClue& clue : transcript) {
    if (clue.speaker == self_seat || !clue.claim.has_value()) continue;
    if (evaluate(*clue.claim, scene) != Truth::True) {
      ++inconsistent[clue.speaker];
    }
  }
  int best_seat = -1;
  int best_count = 0;
  bool tie = false;
  for (const auto& [seat, count] : inconsistent) {
    if (count > best_count) {
      best_seat = seat;
      best_count = count;
      tie = false;
    } else if (count == best_count) {
      tie = true;
    }
  }
  if (best_count == 0 || tie) {
    return std::nullopt;
  }
  return best_seat;
}

PolicyResponse ScriptedCivilian::act(const PolicyRequest& request) {
  if (request.stage == Stage::Clue) {
    return clue_response(honest_civilian_clue(*request.scene, request.history, request.turn_seed));
  }
  PolicyResponse response;
  const std::optional<int> choice =
      consistency_vote(*request.scene, request.history, request.seat);
  response.action = VoteAction{choice};
  response.raw_text =
      choice.has_value() ? "\\boxed{" + std::to_string(*choice + 1) + "}" : "\\boxed{N/A}";
  return response;
}

PolicyResponse ScriptedSpyNaive::act(const PolicyRequest& request) {
  if (request.stage == Stage::Clue) {
    return clue_response(naive_spy_clue(*request.scene, request.history, request.turn_seed));
  }
  PolicyResponse response;
  response.action = VoteAction{std::nullopt};
  response.raw_text = "\\boxed{N/A}";
  return response;
}

PolicyResponse ScriptedSpyOracle::act(const PolicyRequest& request) {
  if (request.stage != Stage::Clue) {
    PolicyResponse response;
    response.action = VoteAction{std::nullopt};
    response.raw_text = "\\boxed{N/A}";
    return response;
  }
  if (request.oracle_change_log == nullptr) {
    return clue_response(naive_spy_clue(*request.scene, request.history, request.turn_seed));
  }
  const SpyClueChoice choice = oracle_spy_clue(*request.scene, *request.oracle_change_log,
                                               request.history, request.turn_seed);
  PolicyResponse response = clue_response(ClueChoice{choice.claim, choice.repeated});
  if (choice.oracle_fallback) {
    response.private_reasoning = "oracle claim space empty; fell back to a naive clue";
  }
  return response;
}

}  // namespace arena
