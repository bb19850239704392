#include "arena/game.hpp"

#include <algorithm>
#include <numeric>

#include "arena/errors.hpp"
#include "arena/rng.hpp"

namespace arena {

namespace {

// Stable sub-stream tags for per-turn seeds.
constexpr std::uint64_t kClueStream = 0x11;
constexpr std::uint64_t kDecisionStream = 0x22;

std::vector<ClueLine> to_clue_lines(const std::vector<VisibleClue>& clues) {
  std::vector<ClueLine> lines;
  lines.reserve(clues.size());
  for (const VisibleClue& c : clues) {
    lines.push_back(ClueLine{c.speaker + 1, c.round + 1, c.text});
  }
  return lines;
}

Json optional_to_json(const std::optional<double>& v) {
  return v.has_value() ? Json(*v) : Json(nullptr);
}

std::optional<double> optional_from_json(const Json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<double>();
}

}  // namespace

void EpisodeConfig::validate() const {
  if (n_civilians < 2) throw ConfigError("episode: n_civilians must be >= 2");
  if (clue_rounds < 1) throw ConfigError("episode: clue_rounds must be >= 1");
  if (beta <= 0.0 || lambda <= 0.0) throw ConfigError("episode: beta and lambda must be > 0");
  if (alpha < 0.0 || alpha >= 1.0) throw ConfigError("episode: alpha must be in [0, 1)");
  if (rho < 0.0 || rho >= 1.0) throw ConfigError("episode: rho must be in [0, 1)");
  if (epsilon <= 0.0) throw ConfigError("episode: epsilon must be > 0");
  if (tau_clue < 0.0 || tau_dec < 0.0) throw ConfigError("episode: tau must be >= 0");
}

Json episode_config_to_json(const EpisodeConfig& c) {
  return Json{{"n_civilians", c.n_civilians},
              {"clue_rounds", c.clue_rounds},
              {"beta", c.beta},
              {"lambda", c.lambda},
              {"alpha", c.alpha},
              {"rho", c.rho},
              {"tau_clue", c.tau_clue},
              {"tau_dec", c.tau_dec},
              {"epsilon", c.epsilon},
              {"fallback_clue", c.fallback_clue},
              {"expose_change_log_to_spy", c.expose_change_log_to_spy}};
}

EpisodeConfig episode_config_from_json(const Json& j, const std::string& path) {
  EpisodeConfig c;
  if (j.contains("n_civilians")) c.n_civilians = static_cast<int>(require_int(j, "n_civilians", path));
  if (j.contains("clue_rounds")) c.clue_rounds = static_cast<int>(require_int(j, "clue_rounds", path));
  if (j.contains("beta")) c.beta = require_number(j, "beta", path);
  if (j.contains("lambda")) c.lambda = require_number(j, "lambda", path);
  if (j.contains("alpha")) c.alpha = require_number(j, "alpha", path);
  if (j.contains("rho")) c.rho = require_number(j, "rho", path);
  if (j.contains("tau_clue")) c.tau_clue = require_number(j, "tau_clue", path);
  if (j.contains("tau_dec")) c.tau_dec = require_number(j, "tau_dec", path);
  if (j.contains("epsilon")) c.epsilon = require_number(j, "epsilon", path);
  if (j.contains("fallback_clue")) c.fallback_clue = require_string(j, "fallback_clue", path);
  if (j.contains("expose_change_log_to_spy")) {
    const Json& f = j["expose_change_log_to_spy"];
    if (!f.is_boolean()) throw ParseError(path + ".expose_change_log_to_spy: expected a boolean");
    c.expose_change_log_to_spy = f.get<bool>();
  }
  c.validate();
  return c;
}

std::vector<VisibleClue> Transcript::visible_before(std::size_t turn) const {
  std::vector<VisibleClue> visible;
  const std::size_t upto = std::min(turn, clues.size());
  visible.reserve(upto);
  for (std::size_t i = 0; i < upto; ++i) {
    visible.push_back(VisibleClue{clues[i].speaker, clues[i].round, clues[i].text, clues[i].claim});
  }
  return visible;
}

std::vector<VisibleClue> Transcript::visible_all() const { return visible_before(clues.size()); }

int VoteTally::cast_votes() const {
  return std::accumulate(votes_by_seat.begin(), votes_by_seat.end(), 0);
}

std::string to_string(Outcome o) {
  return o == Outcome::CiviliansWin ? "civilians_win" : "spy_wins";
}

GameState new_episode(const EpisodeConfig& config, const ScenePair& pair, std::uint64_t seed) {
  config.validate();
  if (auto problem = check_pair(pair)) {
    throw ConfigError("new_episode: invalid scene pair: " + *problem);
  }
  GameState state;
  state.config = config;
  state.pair = pair;
  state.seed = seed;

  RngStream rng(derive_seed(seed, 0x5ea7));
  const int n = config.n_players();
  state.spy_seat = static_cast<int>(rng.uniform_int(0, n - 1));
  state.seating.resize(static_cast<std::size_t>(n));
  std::iota(state.seating.begin(), state.seating.end(), 0);
  rng.shuffle(state.seating);
  return state;
}

void run_clue_stage(GameState& state, std::span<Policy* const> policies,
                    const PromptTemplates& templates) {
  const int n = state.config.n_players();
  if (static_cast<int>(policies.size()) != n) {
    throw ConfigError("run_clue_stage: expected one policy per player");
  }
  for (int round = 0; round < state.config.clue_rounds; ++round) {
    for (int seat = 0; seat < n; ++seat) {
      const std::size_t turn = state.transcript.clues.size();
      const Role role = state.role_of(seat);

      PolicyRequest request;
      request.stage = Stage::Clue;
      request.role = role;
      request.seat = seat;
      request.round = round;
      request.n_players = n;
      request.scene = &state.scene_of(seat);
      request.history = state.transcript.visible_before(turn);
      request.turn_seed = derive_seed(state.seed, kClueStream, turn);
      if (role == Role::Spy && state.config.expose_change_log_to_spy) {
        request.oracle_change_log = &state.pair.change_log;
      }
      request.prompt = render_clue_prompt(
          templates, CluePromptContext{seat + 1, round + 1, n, role,
                                       to_clue_lines(request.history)});

      Clue clue;
      clue.speaker = seat;
      clue.round = round;
      clue.prompt = request.prompt;

      Policy* policy = policies[static_cast<std::size_t>(state.seating[static_cast<std::size_t>(seat)])];
      try {
        PolicyResponse response = policy->act(request);
        const auto* action = std::get_if<ClueAction>(&response.action);
        if (action == nullptr || response.parse_error || action->text.empty()) {
          clue.text = state.config.fallback_clue;
          clue.fallback = true;
          state.flags.push_back("clue_parse_error:seat" + std::to_string(seat));
        } else {
          clue.text = action->text;
          clue.claim = action->claim;
        }
        clue.private_reasoning = response.private_reasoning;
        clue.completion = response.raw_text;
        clue.logprob = response.logprob;
        clue.kl = response.kl;
      } catch (const std::exception& e) {
        clue.text = state.config.fallback_clue;
        clue.fallback = true;
        state.flags.push_back("policy_failure:seat" + std::to_string(seat) + ":" + e.what());
      }
      state.transcript.clues.push_back(std::move(clue));
    }
  }
}

void run_decision_stage(GameState& state, std::span<Policy* const> policies,
                        const PromptTemplates& templates) {
  const int n = state.config.n_players();
  if (static_cast<int>(policies.size()) != n) {
    throw ConfigError("run_decision_stage: expected one policy per player");
  }
  const std::vector<VisibleClue> full_history = state.transcript.visible_all();
  const std::string prompt = render_decision_prompt(
      templates, DecisionPromptContext{n, to_clue_lines(full_history)});

  for (int seat = 0; seat < n; ++seat) {
    if (seat == state.spy_seat) continue;  // the spy never votes

    PolicyRequest request;
    request.stage = Stage::Decision;
    request.role = Role::Civilian;
    request.seat = seat;
    request.n_players = n;
    request.scene = &state.scene_of(seat);
    request.history = full_history;
    request.turn_seed = derive_seed(state.seed, kDecisionStream, static_cast<std::uint64_t>(seat));
    request.prompt = prompt;

    VoteBallot ballot;
    ballot.voter = seat;
    ballot.prompt = prompt;

    Policy* policy = policies[static_cast<std::size_t>(state.seating[static_cast<std::size_t>(seat)])];
    try {
      PolicyResponse response = policy->act(request);
      const auto* action = std::get_if<VoteAction>(&response.action);
      if (action == nullptr || response.parse_error) {
        ballot.choice = std::nullopt;
        ballot.parse_error = true;
        state.flags.push_back("vote_parse_error:seat" + std::to_string(seat));
      } else if (action->choice.has_value() &&
                 (*action->choice < 0 || *action->choice >= n)) {
        ballot.choice = std::nullopt;
        ballot.parse_error = true;
        state.flags.push_back("vote_out_of_range:seat" + std::to_string(seat));
      } else if (action->choice.has_value() && *action->choice == seat) {
        ballot.choice = std::nullopt;
        ballot.self_vote_coerced = true;
        state.flags.push_back("self_vote:seat" + std::to_string(seat));
      } else {
        ballot.choice = action->choice;
      }
      ballot.private_reasoning = response.private_reasoning;
      ballot.completion = response.raw_text;
      ballot.logprob = response.logprob;
      ballot.kl = response.kl;
    } catch (const std::exception& e) {
      ballot.choice = std::nullopt;
      ballot.fallback = true;
      state.flags.push_back("policy_failure:seat" + std::to_string(seat) + ":" + e.what());
    }
    state.ballots.push_back(std::move(ballot));
  }
}

VoteTally tally(std::span<const VoteBallot> ballots, int n_players) {
  VoteTally result;
  result.votes_by_seat.assign(static_cast<std::size_t>(n_players), 0);
  for (const VoteBallot& ballot : ballots) {
    if (ballot.choice.has_value()) {
      ++result.votes_by_seat[static_cast<std::size_t>(*ballot.choice)];
    } else {
      ++result.na_count;
    }
  }
  return result;
}

Outcome episode_outcome(const VoteTally& tally, int spy_seat) {
  const int spy_votes = tally.votes_by_seat[static_cast<std::size_t>(spy_seat)];
  if (spy_votes == 0) return Outcome::SpyWins;
  int argmax_count = 0;
  for (int votes : tally.votes_by_seat) {
    if (votes > spy_votes) return Outcome::SpyWins;
    if (votes == spy_votes) ++argmax_count;
  }
  return argmax_count == 1 ? Outcome::CiviliansWin : Outcome::SpyWins;
}

EpisodeRecord run_episode(const EpisodeConfig& config, const ScenePair& pair,
                          const std::string& pair_id, std::span<Policy* const> policies,
                          const PromptTemplates& templates, std::uint64_t seed) {
  GameState state = new_episode(config, pair, seed);
  run_clue_stage(state, policies, templates);
  run_decision_stage(state, policies, templates);

  EpisodeRecord record;
  record.pair_id = pair_id;
  record.seed = seed;
  record.config_hash = hex64(fnv1a64(episode_config_to_json(config).dump()));
  record.seating = state.seating;
  record.spy_seat = state.spy_seat;
  record.clues = state.transcript.clues;
  record.ballots = state.ballots;
  record.vote_tally = tally(record.ballots, config.n_players());
  record.outcome = episode_outcome(record.vote_tally, record.spy_seat);
  record.flags = state.flags;
  return record;
}

Json episode_record_to_json(const EpisodeRecord& record) {
  Json clues = Json::array();
  for (const Clue& c : record.clues) {
    clues.push_back(Json{{"speaker", c.speaker},
                         {"round", c.round},
                         {"text", c.text},
                         {"claim", c.claim.has_value() ? claim_to_json(*c.claim) : Json(nullptr)},
                         {"reasoning", c.private_reasoning},
                         {"fallback", c.fallback},
                         {"prompt", c.prompt},
                         {"completion", c.completion},
                         {"logprob", optional_to_json(c.logprob)},
                         {"kl", optional_to_json(c.kl)}});
  }
  Json ballots = Json::array();
  for (const VoteBallot& b : record.ballots) {
    ballots.push_back(Json{{"voter", b.voter},
                           {"choice", b.choice.has_value() ? Json(*b.choice) : Json(nullptr)},
                           {"self_vote_coerced", b.self_vote_coerced},
                           {"parse_error", b.parse_error},
                           {"fallback", b.fallback},
                           {"reasoning", b.private_reasoning},
                           {"prompt", b.prompt},
                           {"completion", b.completion},
                           {"logprob", optional_to_json(b.logprob)},
                           {"kl", optional_to_json(b.kl)}});
  }
  return Json{{"pair_id", record.pair_id},
              {"seed", record.seed},
              {"config_hash", record.config_hash},
              {"seating", record.seating},
              {"spy_seat", record.spy_seat},
              {"clues", std::move(clues)},
              {"ballots", std::move(ballots)},
              {"tally", Json{{"votes_by_seat", record.vote_tally.votes_by_seat},
                             {"na_count", record.vote_tally.na_count}}},
              {"outcome", to_string(record.outcome)},
              {"flags", record.flags},
              {"clue_advantages", record.clue_advantages},
              {"decision_advantages", record.decision_advantages}};
}

EpisodeRecord episode_record_from_json(const Json& j, const std::string& path) {
  EpisodeRecord record;
  record.pair_id = require_string(j, "pair_id", path);
  record.seed = static_cast<std::uint64_t>(require_int(j, "seed", path));
  record.config_hash = require_string(j, "config_hash", path);
  for (const Json& s : require_array(j, "seating", path)) {
    record.seating.push_back(s.get<int>());
  }
  record.spy_seat = static_cast<int>(require_int(j, "spy_seat", path));

  std::size_t index = 0;
  for (const Json& c : require_array(j, "clues", path)) {
    const std::string cpath = path + ".clues[" + std::to_string(index++) + "]";
    Clue clue;
    clue.speaker = static_cast<int>(require_int(c, "speaker", cpath));
    clue.round = static_cast<int>(require_int(c, "round", cpath));
    clue.text = require_string(c, "text", cpath);
    if (c.contains("claim") && !c["claim"].is_null()) {
      clue.claim = claim_from_json(c["claim"], cpath + ".claim");
    }
    clue.private_reasoning = require_string(c, "reasoning", cpath);
    clue.fallback = require_field(c, "fallback", cpath).get<bool>();
    clue.prompt = require_string(c, "prompt", cpath);
    clue.completion = require_string(c, "completion", cpath);
    clue.logprob = optional_from_json(c, "logprob");
    clue.kl = optional_from_json(c, "kl");
    record.clues.push_back(std::move(clue));
  }

  index = 0;
  for (const Json& b : require_array(j, "ballots", path)) {
    const std::string bpath = path + ".ballots[" + std::to_string(index++) + "]";
    VoteBallot ballot;
    ballot.voter = static_cast<int>(require_int(b, "voter", bpath));
    if (b.contains("choice") && !b["choice"].is_null()) {
      ballot.choice = b["choice"].get<int>();
    }
    ballot.self_vote_coerced = require_field(b, "self_vote_coerced", bpath).get<bool>();
    ballot.parse_error = require_field(b, "parse_error", bpath).get<bool>();
    ballot.fallback = require_field(b, "fallback", bpath).get<bool>();
    ballot.private_reasoning = require_string(b, "reasoning", bpath);
    ballot.prompt = require_string(b, "prompt", bpath);
    ballot.completion = require_string(b, "completion", bpath);
    ballot.logprob = optional_from_json(b, "logprob");
    ballot.kl = optional_from_json(b, "kl");
    record.ballots.push_back(std::move(ballot));
  }

  const Json& t = require_field(j, "tally", path);
  for (const Json& v : require_array(t, "votes_by_seat", path + ".tally")) {
    record.vote_tally.votes_by_seat.push_back(v.get<int>());
  }
  record.vote_tally.na_count = static_cast<int>(require_int(t, "na_count", path + ".tally"));

  const std::string outcome = require_string(j, "outcome", path);
  if (outcome == "civilians_win") record.outcome = Outcome::CiviliansWin;
  else if (outcome == "spy_wins") record.outcome = Outcome::SpyWins;
  else throw ParseError(path + ".outcome: unknown outcome '" + outcome + "'");

  for (const Json& f : require_array(j, "flags", path)) {
    record.flags.push_back(f.get<std::string>());
  }
  for (const Json& a : require_array(j, "clue_advantages", path)) {
    record.clue_advantages.push_back(a.get<double>());
  }
  for (const Json& a : require_array(j, "decision_advantages", path)) {
    record.decision_advantages.push_back(a.get<double>());
  }
  return record;
}

}  // namespace arena
