#include "arena/scheduler.hpp"

#include "arena/errors.hpp"

namespace arena {

void SchedulerConfig::validate() const {
  auto unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!unit(tau_acc_up) || !unit(tau_err_up) || !unit(tau_na_up) || !unit(tau_na_down)) {
    throw ConfigError("scheduler: thresholds must lie in [0, 1]");
  }
  if (rho < 0.0 || rho >= 1.0) {
    throw ConfigError("scheduler: rho must be in [0, 1)");
  }
  if (k_min < 1) {
    throw ConfigError("scheduler: k_min must be >= 1");
  }
}

BatchMetrics batch_metrics(std::span<const VoteOutcome> votes) {
  if (votes.empty()) {
    throw ConfigError("batch_metrics: empty batch");
  }
  double correct = 0.0;
  double na = 0.0;
  for (const VoteOutcome& v : votes) {
    if (!v.choice.has_value()) {
      na += 1.0;
    } else if (*v.choice == v.true_spy) {
      correct += 1.0;
    }
  }
  const double n = static_cast<double>(votes.size());
  return BatchMetrics{correct / n, na / n};
}

void ema_update(SchedulerState& state, const BatchMetrics& metrics, double rho) {
  state.ema_acc = rho * state.ema_acc + (1.0 - rho) * metrics.acc;
  state.ema_na = rho * state.ema_na + (1.0 - rho) * metrics.na;
}

SwitchResult maybe_switch(SchedulerState& state, const SchedulerConfig& config) {
  ++state.evals_since_switch;
  const long d = state.evals_since_switch;

  SwitchResult result;
  if (state.phase == Phase::Decision) {
    if (state.ema_acc >= config.tau_acc_up && state.ema_na <= config.tau_na_down &&
        d >= config.k_min) {
      state.phase = Phase::Clue;
      result.switched = true;
      result.reason = "acc";
    }
  } else {
    const bool err_trigger = 1.0 - state.ema_acc >= config.tau_err_up;
    const bool na_trigger = state.ema_na >= config.tau_na_up;
    if ((err_trigger || na_trigger) && d >= config.k_min) {
      state.phase = Phase::Decision;
      result.switched = true;
      result.reason = err_trigger && na_trigger ? "err+na" : (err_trigger ? "err" : "na");
    }
  }

  if (!result.switched && config.patience > 0 && d >= config.patience) {
    state.phase = state.phase == Phase::Decision ? Phase::Clue : Phase::Decision;
    result.switched = true;
    result.forced = true;
    result.reason = "forced";
  }

  if (result.switched) {
    state.evals_since_switch = 0;
  }
  return result;
}

}  // namespace arena
