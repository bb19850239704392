#pragma once

#include <optional>
#include <span>
#include <vector>

#include "arena/game.hpp"

namespace arena {

// Clue-stage rewards. Civilian entries follow seat order with the spy seat
// removed. Zero-sum by construction: spy + sum(civilians) == 0 analytically.
struct ClueRewards {
  double spy = 0.0;
  std::vector<double> civilians;

  double total() const;
};

//   r_s   = -beta * (v_s - mean(v_c))
//   r_c_j =  beta/n_c * (v_s - mean(v_c)) - lambda * (v_c_j - mean(v_c))
ClueRewards clue_rewards(const VoteTally& tally, int spy_seat, double beta, double lambda);

// Per-role EMA baselines that absorb the information asymmetry between the
// spy and the civilian side. Initialized at zero; single-writer.
struct RoleBaselines {
  double spy = 0.0;
  double civilian = 0.0;
};

struct ClueAdvantages {
  double spy = 0.0;
  std::vector<double> civilians;
};

// Updates the baselines in place (b <- alpha*b + (1-alpha)*r, the civilian
// channel with the mean civilian reward) and returns advantages against the
// freshly updated baselines.
ClueAdvantages role_advantage_update(RoleBaselines& baselines, const ClueRewards& rewards,
                                     double alpha);

// +1 for naming the spy, -0.5 for abstaining (NA), -1 otherwise.
double decision_reward(const std::optional<int>& choice, int spy_seat);

// A_i = (r_i - mean) / (population std + epsilon).
std::vector<double> group_normalize(std::span<const double> rewards, double epsilon);

}  // namespace arena
