#include "arena/losses.hpp"

#include <cmath>
#include <string>

#include "arena/errors.hpp"

namespace arena {

namespace {

double advantage_weighted_loss(std::span<const double> advantages, const PolicyEval& eval,
                               double tau, const char* what) {
  const std::size_t n = advantages.size();
  if (eval.logprobs.size() != n || eval.kls.size() != n) {
    throw ConfigError(std::string(what) + ": advantages (" + std::to_string(n) +
                      "), logprobs (" + std::to_string(eval.logprobs.size()) + ") and kls (" +
                      std::to_string(eval.kls.size()) + ") must have equal lengths");
  }
  if (n == 0) {
    throw ConfigError(std::string(what) + ": empty input");
  }
  double policy_term = 0.0;
  double kl_term = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    policy_term += advantages[i] * eval.logprobs[i];
    kl_term += eval.kls[i];
  }
  const double dn = static_cast<double>(n);
  return -policy_term / dn + tau * kl_term / dn;
}

}  // namespace

void PolicyEval::validate() const {
  for (double lp : logprobs) {
    if (!(lp <= 0.0) || std::isnan(lp)) {
      throw ConfigError("PolicyEval: log-probabilities must be <= 0 and finite");
    }
  }
  for (double kl : kls) {
    if (!(kl >= 0.0) || std::isnan(kl)) {
      throw ConfigError("PolicyEval: KL estimates must be >= 0 and finite");
    }
  }
}

double clue_loss(std::span<const double> advantages, const PolicyEval& eval, double tau_clue) {
  return advantage_weighted_loss(advantages, eval, tau_clue, "clue_loss");
}

double decision_loss(std::span<const double> advantages, const PolicyEval& eval, double tau_dec) {
  return advantage_weighted_loss(advantages, eval, tau_dec, "decision_loss");
}

double gated_loss(Phase phase, double loss_clue, double loss_dec) {
  const int m = static_cast<int>(phase);
  return m * loss_clue + (1 - m) * loss_dec;
}

}  // namespace arena
