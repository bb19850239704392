#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arena/jsonio.hpp"
#include "arena/policy.hpp"
#include "arena/prompts.hpp"
#include "arena/scene.hpp"

namespace arena {

struct EpisodeConfig {
  int n_civilians = 4;
  int clue_rounds = 2;
  double beta = 0.1;
  double lambda = 0.1;
  double alpha = 0.95;    // role-baseline decay
  double rho = 0.95;      // scheduler EMA decay
  double tau_clue = 0.04;
  double tau_dec = 0.04;
  double epsilon = 1e-8;  // group-normalization guard
  std::string fallback_clue = "My picture shows several objects.";

  // Test-only privilege for the oracle spy: hands the pair's change log to
  // the spy's policy requests.
  bool expose_change_log_to_spy = false;

  int n_players() const { return n_civilians + 1; }
  void validate() const;  // throws ConfigError
};

Json episode_config_to_json(const EpisodeConfig& config);
EpisodeConfig episode_config_from_json(const Json& j, const std::string& path);

// One public statement plus everything needed to audit and export it.
// `private_reasoning` is logged but never enters another player's view.
struct Clue {
  int speaker = 0;  // seat
  int round = 0;
  std::string text;
  std::optional<Claim> claim;
  std::string private_reasoning;
  bool fallback = false;
  std::string prompt;
  std::string completion;
  std::optional<double> logprob;
  std::optional<double> kl;
};

struct Transcript {
  std::vector<Clue> clues;

  // Clues visible to the speaker of global turn `turn`: exactly those with
  // a smaller global index.
  std::vector<VisibleClue> visible_before(std::size_t turn) const;
  std::vector<VisibleClue> visible_all() const;
};

struct VoteBallot {
  int voter = 0;                     // seat
  std::optional<int> choice;         // seat or NA
  bool self_vote_coerced = false;
  bool parse_error = false;
  bool fallback = false;             // policy failure path
  std::string private_reasoning;
  std::string prompt;
  std::string completion;
  std::optional<double> logprob;
  std::optional<double> kl;
};

struct VoteTally {
  std::vector<int> votes_by_seat;
  int na_count = 0;

  int cast_votes() const;
};

enum class Outcome { CiviliansWin, SpyWins };

std::string to_string(Outcome o);

struct GameState {
  EpisodeConfig config;
  ScenePair pair;
  std::vector<int> seating;  // seat -> policy slot
  int spy_seat = 0;
  std::uint64_t seed = 0;
  Transcript transcript;
  std::vector<VoteBallot> ballots;
  std::vector<std::string> flags;

  Role role_of(int seat) const { return seat == spy_seat ? Role::Spy : Role::Civilian; }
  const Scene& scene_of(int seat) const {
    return seat == spy_seat ? pair.spy : pair.civilian;
  }
};

// Uniform spy seat and uniform seating permutation, deterministic per seed.
GameState new_episode(const EpisodeConfig& config, const ScenePair& pair, std::uint64_t seed);

// Sequential speaking, seat order, `clue_rounds` passes. Policy failures
// degrade to the configured fallback clue with an episode flag; the episode
// never aborts.
void run_clue_stage(GameState& state, std::span<Policy* const> policies,
                    const PromptTemplates& templates);

// Civilian-only voting over the full transcript. Self-votes coerce to NA.
void run_decision_stage(GameState& state, std::span<Policy* const> policies,
                        const PromptTemplates& templates);

VoteTally tally(std::span<const VoteBallot> ballots, int n_players);

// Civilians win iff the spy seat is the unique plurality choice among cast
// (non-NA) votes. Ties, a wrong plurality, and all-NA go to the spy.
Outcome episode_outcome(const VoteTally& tally, int spy_seat);

// A full episode line for the JSONL log; advantage fields are filled by the
// training loop before the record is persisted.
struct EpisodeRecord {
  std::string pair_id;
  std::uint64_t seed = 0;
  std::string config_hash;
  std::vector<int> seating;
  int spy_seat = 0;
  std::vector<Clue> clues;
  std::vector<VoteBallot> ballots;
  VoteTally vote_tally;
  Outcome outcome = Outcome::SpyWins;
  std::vector<std::string> flags;
  std::vector<double> clue_advantages;      // per seat
  std::vector<double> decision_advantages;  // per ballot, ballot order
};

EpisodeRecord run_episode(const EpisodeConfig& config, const ScenePair& pair,
                          const std::string& pair_id, std::span<Policy* const> policies,
                          const PromptTemplates& templates, std::uint64_t seed);

Json episode_record_to_json(const EpisodeRecord& record);
EpisodeRecord episode_record_from_json(const Json& j, const std::string& path);

}  // namespace arena
