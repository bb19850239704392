#include "arena/rewards.hpp"

#include <cmath>
#include <numeric>

#include "arena/errors.hpp"

namespace arena {

double ClueRewards::total() const {
  return spy + std::accumulate(civilians.begin(), civilians.end(), 0.0);
}

ClueRewards clue_rewards(const VoteTally& tally, int spy_seat, double beta, double lambda) {
  if (beta <= 0.0 || lambda <= 0.0) {
    throw ConfigError("clue_rewards: beta and lambda must be > 0");
  }
  const int n_players = static_cast<int>(tally.votes_by_seat.size());
  const int n_civilians = n_players - 1;
  const double v_s = static_cast<double>(tally.votes_by_seat[static_cast<std::size_t>(spy_seat)]);

  std::vector<double> civilian_votes;
  civilian_votes.reserve(static_cast<std::size_t>(n_civilians));
  for (int seat = 0; seat < n_players; ++seat) {
    if (seat == spy_seat) continue;
    civilian_votes.push_back(static_cast<double>(tally.votes_by_seat[static_cast<std::size_t>(seat)]));
  }
  const double v_bar =
      std::accumulate(civilian_votes.begin(), civilian_votes.end(), 0.0) / n_civilians;

  ClueRewards rewards;
  rewards.spy = -beta * (v_s - v_bar);
  rewards.civilians.reserve(civilian_votes.size());
  for (double v : civilian_votes) {
    rewards.civilians.push_back(beta / n_civilians * (v_s - v_bar) - lambda * (v - v_bar));
  }
  return rewards;
}

ClueAdvantages role_advantage_update(RoleBaselines& baselines, const ClueRewards& rewards,
                                     double alpha) {
  if (alpha < 0.0 || alpha >= 1.0) {
    throw ConfigError("role_advantage_update: alpha must be in [0, 1)");
  }
  const double mean_civilian =
      std::accumulate(rewards.civilians.begin(), rewards.civilians.end(), 0.0) /
      static_cast<double>(rewards.civilians.size());

  baselines.spy = alpha * baselines.spy + (1.0 - alpha) * rewards.spy;
  baselines.civilian = alpha * baselines.civilian + (1.0 - alpha) * mean_civilian;

  ClueAdvantages adv;
  adv.spy = rewards.spy - baselines.spy;
  adv.civilians.reserve(rewards.civilians.size());
  for (double r : rewards.civilians) {
    adv.civilians.push_back(r - baselines.civilian);
  }
  return adv;
}

double decision_reward(const std::optional<int>& choice, int spy_seat) {
  if (!choice.has_value()) return -0.5;
  return *choice == spy_seat ? 1.0 : -1.0;
}

std::vector<double> group_normalize(std::span<const double> rewards, double epsilon) {
  if (rewards.empty()) {
    throw ConfigError("group_normalize: empty reward group");
  }
  if (epsilon <= 0.0) {
    throw ConfigError("group_normalize: epsilon must be > 0");
  }
  const double n = static_cast<double>(rewards.size());
  const double mean = std::accumulate(rewards.begin(), rewards.end(), 0.0) / n;
  double variance = 0.0;
  for (double r : rewards) {
    variance += (r - mean) * (r - mean);
  }
  variance /= n;
  const double denom = std::sqrt(variance) + epsilon;

  std::vector<double> advantages;
  advantages.reserve(rewards.size());
  for (double r : rewards) {
    advantages.push_back((r - mean) / denom);
  }
  return advantages;
}

}  // namespace arena
