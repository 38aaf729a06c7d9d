#include "rwl/identities.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "rwl/quadrature.hpp"

namespace rwl {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

TEST(Quadrature, ConstantOverQuarterTurn) {
  auto r = adaptive_simpson([](double) { return 1.0; }, 0, kHalfPi);
  EXPECT_NEAR(r.value, kHalfPi, 1e-12);
  EXPECT_TRUE(r.converged);
}

TEST(Quadrature, SmoothIntegrands) {
  EXPECT_NEAR(adaptive_simpson([](double t) { return std::sin(t); }, 0, kHalfPi).value, 1.0, 1e-11);
  EXPECT_NEAR(adaptive_simpson([](double t) { return 2 * std::sin(2 * t); }, 0, kHalfPi).value, 2.0, 1e-11);
  EXPECT_NEAR(adaptive_simpson([](double t) { return std::exp(t); }, 0, 1).value, std::exp(1.0) - 1, 1e-11);
  // Simpson is exact on cubics.
  EXPECT_DOUBLE_EQ(adaptive_simpson([](double t) { return t * t * t; }, 0, 2).value, 4.0);
  EXPECT_EQ(adaptive_simpson([](double t) { return t; }, 1, 1).value, 0.0);
}

TEST(Quadrature, ReportsCapWithoutConverging) {
  QuadratureOptions opts;
  opts.abs_tol = opts.rel_tol = 1e-16;
  opts.max_intervals = 8;
  auto r = adaptive_simpson([](double t) { return std::sqrt(t); }, 0, 1, opts);
  EXPECT_FALSE(r.converged);
  EXPECT_LE(r.intervals, 8u);
  EXPECT_NEAR(r.value, 2.0 / 3.0, 1e-2);
}

TEST(VerifyEgf, GridSmallRanges) {
  auto one = verify_egf_gg2(1);
  EXPECT_TRUE(one.passed);
  EXPECT_EQ(one.terms, std::vector<std::string>{"2"});
  auto three = verify_egf_gg2(3);
  EXPECT_TRUE(three.passed);
  EXPECT_EQ(three.terms, (std::vector<std::string>{"2", "16", "208"}));
  EXPECT_TRUE(verify_egf_gg2(25).passed);
}

TEST(VerifyEgf, A087547SmallRanges) {
  EXPECT_EQ(verify_ogf_a087547(1).terms, std::vector<std::string>{"1"});
  auto three = verify_ogf_a087547(3);
  EXPECT_TRUE(three.passed);
  EXPECT_EQ(three.terms, (std::vector<std::string>{"1", "4", "22"}));
  EXPECT_TRUE(verify_ogf_a087547(25).passed);
}

TEST(VerifyEgf, A182525SmallRanges) {
  auto zero = verify_egf_a182525(0);
  EXPECT_TRUE(zero.passed);
  EXPECT_EQ(zero.terms, std::vector<std::string>{"1"});
  EXPECT_EQ(verify_egf_a182525(2).terms, (std::vector<std::string>{"1", "2", "10"}));
  EXPECT_TRUE(verify_egf_a182525(25).passed);
}

TEST(VerifyEgf, SeriesExtendsPastDefaultOrder) {
  auto r = verify_egf_a182525(40);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.terms.size(), 41u);
}

TEST(IntegralIdentities, FirstIndexIsExact) {
  auto r = verify_lemma37(1, 1e-8);
  ASSERT_TRUE(r.passed);
  ASSERT_EQ(r.samples.size(), 2u);
  EXPECT_EQ(r.samples[0].exact, "4");
  EXPECT_NEAR(r.samples[0].numeric, 4.0, 1e-10);
  EXPECT_EQ(r.samples[1].exact, "2");
  EXPECT_NEAR(r.samples[1].numeric, 2.0, 1e-10);
}

TEST(IntegralIdentities, HoldsThroughTwenty) {
  auto r = verify_lemma37(20, 1e-8);
  EXPECT_TRUE(r.passed) << r.counterexample.value_or("");
  EXPECT_EQ(r.samples.size(), 40u);
  EXPECT_LE(r.max_residual, 1e-8);
}

TEST(IntegralIdentities, TooTightToleranceFails) {
  QuadratureOptions coarse;
  coarse.abs_tol = coarse.rel_tol = 1e-2;
  auto r = verify_lemma37(10, 1e-12, coarse);
  EXPECT_FALSE(r.passed);
  EXPECT_TRUE(r.counterexample.has_value());
}

TEST(Asymptotic, FirstPoint) {
  auto r = check_asymptotic_gg2({1});
  ASSERT_EQ(r.samples.size(), 1u);
  EXPECT_NEAR(r.samples[0].numeric, 4 / std::sqrt(std::numbers::pi), 1e-14);
  EXPECT_NEAR(r.samples[0].numeric, 2.2568, 1e-4);
  EXPECT_TRUE(r.passed);
}

TEST(Asymptotic, RatiosImprove) {
  auto small = check_asymptotic_gg2({10, 20});
  EXPECT_TRUE(small.passed);
  EXPECT_GT(small.samples[0].residual, small.samples[1].residual);
  EXPECT_TRUE(check_asymptotic_gg2({50, 100, 200}).passed);
}

TEST(Asymptotic, NonIncreasingInputFails) {
  EXPECT_FALSE(check_asymptotic_gg2({20, 10}).passed);
  EXPECT_FALSE(check_asymptotic_gg2({20, 20}).passed);
}

TEST(ExactClaims, SpotChecks) {
  auto eq915 = verify_theorem(TheoremClaim::grid2_equals_a087923, 3);
  EXPECT_TRUE(eq915.passed);
  EXPECT_EQ(eq915.terms.back(), "208");
  auto eq003 = verify_theorem(TheoremClaim::bala_identity, 2);
  EXPECT_TRUE(eq003.passed);
  EXPECT_EQ(eq003.terms.back(), "2");
  auto forms = verify_theorem(TheoremClaim::bala_forms_agree, 4);
  EXPECT_TRUE(forms.passed);
  EXPECT_EQ(forms.terms.back(), "160");
  EXPECT_TRUE(verify_theorem(TheoremClaim::a087547_sum_equals_rec, 50).passed);
}

TEST(ExactClaims, ThreadedSweepMatchesSerial) {
  auto serial = verify_theorem(TheoremClaim::bala_identity, 60, 1);
  auto threaded = verify_theorem(TheoremClaim::bala_identity, 60, 4);
  EXPECT_TRUE(threaded.passed);
  EXPECT_EQ(serial.terms, threaded.terms);
}

TEST(ExactClaims, ClaimIds) {
  EXPECT_EQ(parse_theorem_claim("eq900-vs-901"), TheoremClaim::bala_forms_agree);
  EXPECT_EQ(claim_id(TheoremClaim::grid2_equals_a087923), "eq915");
  EXPECT_EQ(parse_theorem_claim("eq999"), std::nullopt);
}

TEST(OracleEquivalence, SmallSweep) {
  auto r = verify_oracle_equivalence(6, 50, 6, 1);
  EXPECT_TRUE(r.passed) << r.counterexample.value_or("");
}

TEST(Determinism, RepeatedRunsMatch) {
  auto a = verify_lemma37(5, 1e-8);
  auto b = verify_lemma37(5, 1e-8);
  ASSERT_EQ(a.samples.size(), b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) EXPECT_EQ(a.samples[i].numeric, b.samples[i].numeric);
  EXPECT_EQ(verify_egf_gg2(10).terms, verify_egf_gg2(10).terms);
}

}  // namespace
}  // namespace rwl
