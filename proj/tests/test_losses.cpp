#include <cmath>

#include "arena/errors.hpp"
#include "arena/losses.hpp"
#include "doctest.h"

using namespace arena;

TEST_SUITE("losses") {

TEST_CASE("advantage-free input reduces to the scaled mean KL") {
  PolicyEval eval;
  eval.logprobs = {-1.0, -2.0};
  eval.kls = {0.1, 0.3};
  const double loss = clue_loss(std::vector<double>{0.0, 0.0}, eval, 0.04);
  CHECK(std::abs(loss - 0.008) < 1e-12);
}

TEST_CASE("hand-computed two-player clue loss") {
  PolicyEval eval;
  eval.logprobs = {-1.0, -2.0};
  eval.kls = {0.1, 0.3};
  const double loss = clue_loss(std::vector<double>{1.0, -1.0}, eval, 0.04);
  CHECK(std::abs(loss - (-0.492)) < 1e-12);
}

TEST_CASE("tau zero strips the regularizer") {
  PolicyEval eval;
  eval.logprobs = {-1.0, -2.0};
  eval.kls = {123.0, 456.0};
  const double loss = clue_loss(std::vector<double>{1.0, -1.0}, eval, 0.0);
  CHECK(std::abs(loss - (-0.5)) < 1e-12);
}

TEST_CASE("hand-computed four-civilian decision loss") {
  PolicyEval eval;
  eval.logprobs = {-0.5, -1.0, -2.0, -0.25};
  eval.kls = {0.0, 0.0, 0.0, 0.0};
  const double loss =
      decision_loss(std::vector<double>{1.0, -1.0, 0.5, -0.5}, eval, 0.04);
  CHECK(std::abs(loss - 0.09375) < 1e-12);
}

TEST_CASE("decision and clue losses share the functional form") {
  PolicyEval eval;
  eval.logprobs = {-0.7, -0.3, -1.1};
  eval.kls = {0.2, 0.0, 0.4};
  const std::vector<double> adv = {0.5, -0.25, 1.5};
  CHECK(clue_loss(adv, eval, 0.04) == decision_loss(adv, eval, 0.04));
}

TEST_CASE("zero KL input makes the regularizer exactly zero") {
  PolicyEval eval;
  eval.logprobs = {-0.5, -1.5};
  eval.kls = {0.0, 0.0};
  const std::vector<double> adv = {2.0, -1.0};
  CHECK(clue_loss(adv, eval, 0.04) == clue_loss(adv, eval, 99.0));
}

TEST_CASE("loss is linear in advantages and in tau") {
  PolicyEval eval;
  eval.logprobs = {-1.0, -0.5, -2.0};
  eval.kls = {0.1, 0.2, 0.3};
  std::vector<double> adv = {1.0, -2.0, 0.5};
  const double base = clue_loss(adv, eval, 0.0);
  std::vector<double> doubled = adv;
  for (double& a : doubled) a *= 2.0;
  CHECK(std::abs(clue_loss(doubled, eval, 0.0) - 2.0 * base) < 1e-12);

  std::vector<double> zeros(3, 0.0);
  const double kl_only = clue_loss(zeros, eval, 1.0);
  CHECK(std::abs(clue_loss(zeros, eval, 2.0) - 2.0 * kl_only) < 1e-12);
}

TEST_CASE("loss is permutation-invariant") {
  PolicyEval eval;
  eval.logprobs = {-1.0, -0.5, -2.0};
  eval.kls = {0.1, 0.2, 0.3};
  const double a = clue_loss(std::vector<double>{1.0, -2.0, 0.5}, eval, 0.04);
  PolicyEval permuted;
  permuted.logprobs = {-2.0, -1.0, -0.5};
  permuted.kls = {0.3, 0.1, 0.2};
  const double b = clue_loss(std::vector<double>{0.5, 1.0, -2.0}, permuted, 0.04);
  CHECK(std::abs(a - b) < 1e-12);
}

TEST_CASE("gated loss selects by phase") {
  CHECK(gated_loss(Phase::Clue, 1.5, -3.0) == 1.5);
  CHECK(gated_loss(Phase::Decision, 1.5, -3.0) == -3.0);
  CHECK(gated_loss(Phase::Clue, 0.25, 0.25) == 0.25);
  CHECK(gated_loss(Phase::Decision, 0.25, 0.25) == 0.25);
}

TEST_CASE("mismatched lengths are rejected") {
  PolicyEval eval;
  eval.logprobs = {-1.0};
  eval.kls = {0.0, 0.0};
  CHECK_THROWS_AS(clue_loss(std::vector<double>{1.0, 2.0}, eval, 0.04), ConfigError);
}

TEST_CASE("eval invariants") {
  PolicyEval good;
  good.logprobs = {-1.0, 0.0};
  good.kls = {0.0, 2.0};
  CHECK_NOTHROW(good.validate());
  PolicyEval bad_lp;
  bad_lp.logprobs = {0.5};
  CHECK_THROWS_AS(bad_lp.validate(), ConfigError);
  PolicyEval bad_kl;
  bad_kl.kls = {-0.1};
  CHECK_THROWS_AS(bad_kl.validate(), ConfigError);
}

}  // TEST_SUITE
