#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "arena/claims.hpp"
#include "arena/scene.hpp"
#include "arena/types.hpp"

namespace arena {

// A clue as other players see it: public text plus the structured claim
// when the speaker emitted one. Never carries private reasoning.
struct VisibleClue {
  int speaker = 0;  // seat, 0-based
  int round = 0;    // 0-based
  std::string text;
  std::optional<Claim> claim;
};

struct ClueAction {
  std::string text;
  std::optional<Claim> claim;
};

struct VoteAction {
  std::optional<int> choice;  // seat, or nullopt for NA
};

// Everything a policy is allowed to see for one turn. The engine guarantees
// the view contains only the player's own scene and role, the public clue
// history, and the rendered stage prompt.
struct PolicyRequest {
  Stage stage = Stage::Clue;
  Role role = Role::Civilian;
  int seat = 0;
  int round = 0;  // clue stage only, 0-based
  int n_players = 0;
  const Scene* scene = nullptr;
  std::string prompt;
  std::vector<VisibleClue> history;
  std::uint64_t turn_seed = 0;

  // Ground-truth change log, granted only to the test-only oracle spy by
  // explicit run configuration; null everywhere else.
  const ChangeLog* oracle_change_log = nullptr;
};

struct PolicyResponse {
  std::string raw_text;
  std::variant<ClueAction, VoteAction> action;
  std::string private_reasoning;
  std::optional<double> logprob;
  std::optional<double> kl;
  bool parse_error = false;
};

class Policy {
 public:
  virtual ~Policy() = default;
  virtual PolicyResponse act(const PolicyRequest& request) = 0;
  virtual std::string name() const = 0;
  // Policies that cannot take concurrent calls are wrapped in a
  // serialization gate by the harness.
  virtual bool thread_safe() const { return true; }
};

// --- Scripted agents over symbolic scenes ---------------------------------

struct ClueChoice {
  std::optional<Claim> claim;
  bool repeated = false;  // claim space exhausted, repeating the oldest claim
};

// A claim that is true of `scene`, unambiguous, and not equal to any claim
// already in `history`. Deterministic in (scene, history, seed); the seed
// rotates the enumeration start. When the space is exhausted, repeats the
// least recent still-true claim with `repeated` set.
ClueChoice honest_civilian_clue(const Scene& scene, std::span<const VisibleClue> history,
                                std::uint64_t seed);

// Honest play on the spy's own scene; mutated objects are not avoided.
ClueChoice naive_spy_clue(const Scene& spy_scene, std::span<const VisibleClue> history,
                          std::uint64_t seed);

struct SpyClueChoice {
  std::optional<Claim> claim;
  bool repeated = false;
  bool oracle_fallback = false;  // oracle-safe space empty, fell back to naive
};

// True claims about the spy scene whose selectors and assertions avoid the
// mutated ids and all before/after shape and color values, hence also true
// of the civilian scene.
SpyClueChoice oracle_spy_clue(const Scene& spy_scene, const ChangeLog& change_log,
                              std::span<const VisibleClue> history, std::uint64_t seed);

// Evaluates every structured claim by other speakers against the voter's
// own scene. A claim is inconsistent when it is false or fails to denote
// (ambiguous); free-text clues are skipped. Votes the unique speaker with
// the most inconsistent claims, NA on a tie or when no claim misfires.
std::optional<int> consistency_vote(const Scene& scene, std::span<const VisibleClue> transcript,
                                    int self_seat);

// Clue: honest_civilian_clue. Vote: consistency_vote.
class ScriptedCivilian final : public Policy {
 public:
  PolicyResponse act(const PolicyRequest& request) override;
  std::string name() const override { return "scripted-civilian"; }
};

// Clue: naive_spy_clue. Spies never vote; a decision request answers NA.
class ScriptedSpyNaive final : public Policy {
 public:
  PolicyResponse act(const PolicyRequest& request) override;
  std::string name() const override { return "scripted-spy-naive"; }
};

// Clue: oracle_spy_clue when the change log is exposed, naive otherwise.
class ScriptedSpyOracle final : public Policy {
 public:
  PolicyResponse act(const PolicyRequest& request) override;
  std::string name() const override { return "scripted-spy-oracle"; }
};

}  // namespace arena
