#pragma once

#include <optional>
#include <span>
#include <string>

#include "arena/types.hpp"

namespace arena {

// Hysteresis thresholds and pacing for the two-phase training gate.
// `patience <= 0` disables forced switches.
struct SchedulerConfig {
  double tau_acc_up = 0.9;   // Decision -> Clue: ema_acc must reach this
  double tau_err_up = 0.4;   // Clue -> Decision: 1 - ema_acc at or above this
  double tau_na_up = 0.5;    // Clue -> Decision: ema_na at or above this
  double tau_na_down = 0.1;  // Decision -> Clue: ema_na must be at or below
  double rho = 0.95;         // EMA smoothing
  int k_min = 5;             // minimum evaluations between switches
  int patience = 20;         // force a switch after this many silent evaluations

  void validate() const;
};

// Phase gate state. `evals_since_switch` serves both the dwell-time check
// and the patience counter: both reset whenever a switch (natural or
// forced) happens.
struct SchedulerState {
  Phase phase = Phase::Decision;
  double ema_acc = 0.0;
  double ema_na = 0.0;
  long evals_since_switch = 0;
};

// One civilian ballot with its episode's ground truth, for batch metrics.
struct VoteOutcome {
  std::optional<int> choice;  // seat, or nullopt for NA
  int true_spy = 0;
};

struct BatchMetrics {
  double acc = 0.0;  // fraction of ballots naming the true spy
  double na = 0.0;   // fraction of NA ballots
};

// Empirical fractions over all civilian ballots in the batch. Throws
// ConfigError on an empty batch.
BatchMetrics batch_metrics(std::span<const VoteOutcome> votes);

// ema <- rho * ema + (1 - rho) * x, both channels.
void ema_update(SchedulerState& state, const BatchMetrics& metrics, double rho);

struct SwitchResult {
  bool switched = false;
  bool forced = false;
  std::string reason;  // "acc", "err", "na", "err+na", "forced" or ""
};

// Counts this evaluation, then applies the hysteresis gate:
//   Decision -> Clue  iff ema_acc >= tau_acc_up and ema_na <= tau_na_down
//   Clue -> Decision  iff 1 - ema_acc >= tau_err_up or ema_na >= tau_na_up
// both gated by at least k_min evaluations since the last switch. If no
// switch has fired for `patience` evaluations, the phase is flipped and the
// result flagged as forced.
SwitchResult maybe_switch(SchedulerState& state, const SchedulerConfig& config);

}  // namespace arena
