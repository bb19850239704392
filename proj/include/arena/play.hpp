#pragma once

#include <span>
#include <string>
#include <vector>

#include "arena/dataset.hpp"
#include "arena/runconfig.hpp"
#include "arena/scheduler.hpp"
#include "arena/training.hpp"

namespace arena {

// Runs one episode with role-bound policies: every civilian seat uses
// `civilian`, the spy seat uses `spy`, wired through the episode's seating
// permutation.
EpisodeRecord run_role_episode(const EpisodeConfig& config, const ScenePair& pair,
                               const std::string& pair_id, Policy* civilian, Policy* spy,
                               const PromptTemplates& templates, std::uint64_t seed);

struct PlayResult {
  std::string episodes_path;
  std::string metrics_path;
  std::string samples_path;
  long episodes = 0;
  long samples = 0;
  int switches = 0;
  Phase final_phase = Phase::Decision;
};

// The full alternating training loop at desk scale. Per iteration: a batch
// of episodes, zero-sum clue rewards with role baselines, group-normalized
// decision advantages, both stage losses with the phase gate, training
// sample export, and one scheduler evaluation. Everything lands in
// episodes.jsonl / metrics.jsonl / samples.jsonl under the out directory.
PlayResult cmd_play(const RunConfig& config);

struct WinRateSplit {
  int episodes = 0;
  int wins = 0;
  double win_rate = 0.0;
};

struct WinRateReport {
  std::string policy_a;
  std::string policy_b;
  int n_rounds = 0;
  WinRateSplit as_civilian;  // A plays every civilian, B the spy
  WinRateSplit as_spy;       // A plays the spy, B every civilian
  double win_rate = 0.0;     // A's overall win rate
  double ci_low = 0.0;       // 95% Wilson interval
  double ci_high = 0.0;
};

// Round-robin: half the rounds with A as the civilian side, half with A as
// the spy. Civilians win by uniquely identifying the spy; A's spy-side wins
// are episodes the spy survives. Pairs are synthesized deterministically
// from the seed, so two evaluations with the same seed see identical games.
WinRateReport cmd_eval_winrate(const RunConfig& config, const std::string& policy_a,
                               const std::string& policy_b, int n_rounds, std::uint64_t seed);

Json win_rate_report_to_json(const WinRateReport& report);

struct ScheduleSimRow {
  long t = 0;
  Phase phase = Phase::Decision;        // phase in force during this step
  Phase phase_after = Phase::Decision;  // phase after the gate ran
  double acc = 0.0;
  double na = 0.0;
  double ema_acc = 0.0;
  double ema_na = 0.0;
  bool switched = false;
  bool forced = false;
  std::string reason;
};

// Deterministic re-run of the phase gate over a metric stream; also used to
// replay logged metrics against logged trajectories.
std::vector<ScheduleSimRow> simulate_schedule(const SchedulerConfig& config,
                                              std::span<const BatchMetrics> stream);

Json schedule_sim_row_to_json(const ScheduleSimRow& row);

}  // namespace arena
