#pragma once

#include <span>
#include <vector>

#include "arena/types.hpp"

namespace arena {

// Per-player quantities supplied by the policy backend. Log-probs are of the
// sampled action; KL is an estimate against the reference policy. This
// module only assembles scalars; the choice of KL estimator and any
// differentiation belong to the external trainer.
struct PolicyEval {
  std::vector<double> logprobs;  // each <= 0
  std::vector<double> kls;       // each >= 0

  void validate() const;  // throws ConfigError on an invariant violation
};

// L = -(1/n) sum A_k * logp_k + tau * (1/n) sum KL_k
double clue_loss(std::span<const double> advantages, const PolicyEval& eval, double tau_clue);

// Same functional form over the civilian group.
double decision_loss(std::span<const double> advantages, const PolicyEval& eval, double tau_dec);

// m * L_clue + (1 - m) * L_dec with m = 1 in the clue phase.
double gated_loss(Phase phase, double loss_clue, double loss_dec);

}  // namespace arena
