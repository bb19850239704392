#include <algorithm>
#include <cmath>

#include "arena/errors.hpp"
#include "arena/rewards.hpp"
#include "arena/rng.hpp"
#include "doctest.h"

using namespace arena;

namespace {

VoteTally make_tally(int spy_seat, int v_s, const std::vector<int>& civilian_votes) {
  VoteTally tally;
  tally.votes_by_seat.assign(civilian_votes.size() + 1, 0);
  tally.votes_by_seat[static_cast<std::size_t>(spy_seat)] = v_s;
  std::size_t j = 0;
  for (int seat = 0; seat < static_cast<int>(tally.votes_by_seat.size()); ++seat) {
    if (seat == spy_seat) continue;
    tally.votes_by_seat[static_cast<std::size_t>(seat)] = civilian_votes[j++];
  }
  const int cast = tally.cast_votes();
  tally.na_count = static_cast<int>(civilian_votes.size()) - cast;
  return tally;
}

}  // namespace

TEST_SUITE("rewards") {

TEST_CASE("hand-computed clue reward vectors") {
  SUBCASE("all four votes on the spy") {
    const ClueRewards r = clue_rewards(make_tally(0, 4, {0, 0, 0, 0}), 0, 0.1, 0.1);
    CHECK(r.spy == doctest::Approx(-0.4).epsilon(0));
    for (double rc : r.civilians) CHECK(rc == doctest::Approx(0.1).epsilon(0));
    CHECK(std::abs(r.spy - (-0.4)) < 1e-12);
    for (double rc : r.civilians) CHECK(std::abs(rc - 0.1) < 1e-12);
  }
  SUBCASE("three votes on the spy, one stray") {
    const ClueRewards r = clue_rewards(make_tally(0, 3, {1, 0, 0, 0}), 0, 0.1, 0.1);
    CHECK(std::abs(r.spy - (-0.275)) < 1e-12);
    CHECK(std::abs(r.civilians[0] - (-0.00625)) < 1e-12);
    for (std::size_t i = 1; i < 4; ++i) CHECK(std::abs(r.civilians[i] - 0.09375) < 1e-12);
  }
  SUBCASE("all NA gives zero everywhere") {
    const ClueRewards r = clue_rewards(make_tally(2, 0, {0, 0, 0, 0}), 2, 0.1, 0.1);
    CHECK(r.spy == 0.0);
    for (double rc : r.civilians) CHECK(rc == 0.0);
  }
}

TEST_CASE("zero-sum holds over fuzzed tallies") {
  RngStream rng(77);
  for (int i = 0; i < 20000; ++i) {
    const int n_c = static_cast<int>(rng.uniform_int(2, 8));
    const int spy = static_cast<int>(rng.uniform_int(0, n_c));
    std::vector<int> votes(static_cast<std::size_t>(n_c), 0);
    int v_s = 0;
    for (int b = 0; b < n_c; ++b) {
      const int pick = static_cast<int>(rng.uniform_int(0, n_c));  // n_c+1 options incl. NA
      if (pick == n_c) continue;                                   // NA
      if (pick == spy) ++v_s;
      else ++votes[static_cast<std::size_t>(pick < spy ? pick : pick - 1)];
    }
    const ClueRewards r = clue_rewards(make_tally(spy, v_s, votes), spy, 0.1, 0.1);
    CHECK(std::abs(r.total()) < 1e-12);
  }
}

TEST_CASE("more votes on the spy hurt the spy and help every civilian") {
  const int spy = 1;
  ClueRewards prev = clue_rewards(make_tally(spy, 0, {1, 0, 1, 0}), spy, 0.1, 0.1);
  for (int v_s = 1; v_s <= 4; ++v_s) {
    const ClueRewards cur = clue_rewards(make_tally(spy, v_s, {1, 0, 1, 0}), spy, 0.1, 0.1);
    CHECK(cur.spy < prev.spy);
    for (std::size_t j = 0; j < cur.civilians.size(); ++j) {
      CHECK(cur.civilians[j] > prev.civilians[j]);
    }
    prev = cur;
  }
}

TEST_CASE("role baseline update: one step from a fresh state") {
  RoleBaselines baselines;
  ClueRewards rewards;
  rewards.spy = -0.275;
  rewards.civilians = {-0.00625, 0.09375, 0.09375, 0.09375};
  const ClueAdvantages adv = role_advantage_update(baselines, rewards, 0.95);
  CHECK(std::abs(baselines.spy - (-0.01375)) < 1e-12);
  CHECK(std::abs(adv.spy - (-0.26125)) < 1e-12);
  // Civilian baseline absorbs the mean civilian reward.
  const double mean_c = (-0.00625 + 3 * 0.09375) / 4.0;
  CHECK(std::abs(baselines.civilian - 0.05 * mean_c) < 1e-12);
}

TEST_CASE("alpha zero pins the baseline to the last reward") {
  RoleBaselines baselines;
  ClueRewards rewards;
  rewards.spy = 0.3;
  rewards.civilians = {0.1, -0.4};
  const ClueAdvantages adv = role_advantage_update(baselines, rewards, 0.0);
  CHECK(adv.spy == 0.0);
  CHECK(baselines.spy == 0.3);
}

TEST_CASE("constant rewards: advantages decay geometrically to zero") {
  RoleBaselines baselines;
  ClueRewards rewards;
  rewards.spy = -0.2;
  rewards.civilians = {0.05, 0.05, 0.05, 0.05};
  const double alpha = 0.95;
  double expected_factor = 1.0;
  for (int t = 1; t <= 200; ++t) {
    const ClueAdvantages adv = role_advantage_update(baselines, rewards, alpha);
    expected_factor *= alpha;
    // Closed form: A_t = r * alpha^t.
    CHECK(std::abs(adv.spy - rewards.spy * expected_factor) < 1e-12);
    if (t == 200) {
      CHECK(std::abs(adv.spy) < 1e-4);
      CHECK(std::abs(baselines.spy - rewards.spy) < 1e-4);
      for (double a : adv.civilians) CHECK(std::abs(a) < 1e-4);
    }
  }
}

TEST_CASE("decision rewards are the three-way split") {
  CHECK(decision_reward(std::optional<int>{2}, 2) == 1.0);
  CHECK(decision_reward(std::nullopt, 2) == -0.5);
  CHECK(decision_reward(std::optional<int>{1}, 2) == -1.0);
}

TEST_CASE("group normalization: unit cases") {
  SUBCASE("symmetric +-1 input is nearly fixed") {
    const std::vector<double> r = {1, -1, 1, -1};
    const std::vector<double> a = group_normalize(r, 1e-8);
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(a[i] - r[i]) < 1e-7);
  }
  SUBCASE("all-equal input collapses to exact zeros") {
    for (double v : group_normalize(std::vector<double>{1, 1, 1, 1}, 1e-8)) {
      CHECK(v == 0.0);
    }
  }
  SUBCASE("hand-computed vector") {
    const std::vector<double> a = group_normalize(std::vector<double>{1, 1, -1, -0.5}, 1e-8);
    CHECK(std::abs(a[0] - 0.9801960478392148) < 1e-9);
    CHECK(std::abs(a[1] - 0.9801960478392148) < 1e-9);
    CHECK(std::abs(a[2] - (-1.2602520615075619)) < 1e-9);
    CHECK(std::abs(a[3] - (-0.7001400341708677)) < 1e-9);
  }
}

TEST_CASE("group normalization properties over random groups") {
  RngStream rng(4242);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(1, 16));
    std::vector<double> r;
    for (int i = 0; i < n; ++i) r.push_back(rng.uniform_real01() * 4.0 - 2.0);
    const std::vector<double> a = group_normalize(r, 1e-8);

    double mean = 0.0;
    for (double v : a) mean += v;
    mean /= n;
    CHECK(std::abs(mean) < 1e-9);

    double sigma = 0.0;
    double mu_r = 0.0;
    for (double v : r) mu_r += v;
    mu_r /= n;
    for (double v : r) sigma += (v - mu_r) * (v - mu_r);
    sigma = std::sqrt(sigma / n);
    if (sigma > 0.0) {
      CHECK(std::max_element(a.begin(), a.end()) - a.begin() ==
            std::max_element(r.begin(), r.end()) - r.begin());
      // The +epsilon shrinks the output std by at most epsilon/sigma.
      double out_var = 0.0;
      for (double v : a) out_var += (v - mean) * (v - mean);
      const double out_std = std::sqrt(out_var / n);
      CHECK(out_std <= 1.0 + 1e-12);
      CHECK(out_std >= 1.0 - 1e-8 / sigma - 1e-12);
    }
  }
}

TEST_CASE("parameter guards") {
  CHECK_THROWS_AS(group_normalize(std::vector<double>{}, 1e-8), ConfigError);
  CHECK_THROWS_AS(group_normalize(std::vector<double>{1.0}, 0.0), ConfigError);
  CHECK_THROWS_AS(clue_rewards(make_tally(0, 0, {0, 0}), 0, 0.0, 0.1), ConfigError);
  RoleBaselines baselines;
  ClueRewards rewards;
  rewards.civilians = {0.0};
  CHECK_THROWS_AS(role_advantage_update(baselines, rewards, 1.0), ConfigError);
}

}  // TEST_SUITE
