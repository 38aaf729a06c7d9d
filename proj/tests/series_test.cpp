#include "rwl/series.hpp"

#include <random>

#include <gtest/gtest.h>

#include "rwl/formulas.hpp"
#include "rwl/generating_functions.hpp"

namespace rwl {
namespace {

Rational q(const char* s) { return Rational::parse(s); }

PowerSeries poly(std::initializer_list<const char*> cs, std::size_t order) {
  std::vector<Rational> v;
  for (const char* c : cs) v.push_back(q(c));
  return PowerSeries(std::move(v), order);
}

PowerSeries random_series(std::mt19937_64& rng, std::size_t order, bool unit_constant) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  std::vector<Rational> c(order);
  for (auto& x : c) x = Rational(mpz_class(num(rng)), mpz_class(den(rng)));
  if (unit_constant) c[0] = Rational(1);
  return PowerSeries(std::move(c), order);
}

ErrorKind error_kind(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::invalid_spec;
}

TEST(SeriesArithmetic, Examples) {
  EXPECT_EQ(mul(poly({"1", "1"}, 3), poly({"1", "-1"}, 3)), poly({"1", "0", "-1"}, 3));
  EXPECT_EQ(add(poly({"1", "1"}, 3), poly({"1", "-1"}, 3)), poly({"2"}, 3));
  EXPECT_EQ(mul(poly({"0", "1"}, 2), poly({"0", "1"}, 2)), PowerSeries(2));
  EXPECT_EQ(sub(poly({"1", "1/2"}, 2), poly({"1/3"}, 2)), poly({"2/3", "1/2"}, 2));
}

TEST(SeriesArithmetic, OrderMismatch) {
  EXPECT_EQ(error_kind([] { add(PowerSeries(2), PowerSeries(3)); }), ErrorKind::order_mismatch);
  EXPECT_EQ(error_kind([] { mul(PowerSeries(4), PowerSeries(3)); }), ErrorKind::order_mismatch);
  EXPECT_EQ(error_kind([] { PowerSeries(0); }), ErrorKind::order_mismatch);
}

TEST(Reciprocal, Examples) {
  EXPECT_EQ(reciprocal(poly({"1", "-1"}, 4)), poly({"1", "1", "1", "1"}, 4));
  EXPECT_EQ(reciprocal(poly({"2"}, 3)), poly({"1/2"}, 3));
  EXPECT_EQ(reciprocal(poly({"1", "-2"}, 3)), poly({"1", "2", "4"}, 3));
  EXPECT_EQ(error_kind([] { reciprocal(poly({"0", "1"}, 3)); }), ErrorKind::zero_constant_term);
}

TEST(Reciprocal, InvertsRandomSeries) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 30; ++i) {
    PowerSeries a = random_series(rng, 12, false);
    if (a[0].is_zero()) continue;
    EXPECT_EQ(a * reciprocal(a), PowerSeries::constant(Rational(1), 12));
  }
}

TEST(SqrtSeries, Examples) {
  EXPECT_EQ(sqrt_series(poly({"1"}, 4)), poly({"1"}, 4));
  PowerSeries r4 = sqrt_series(poly({"1", "-4"}, 3));
  EXPECT_EQ(r4, poly({"1", "-2", "-2"}, 3));
  EXPECT_EQ(r4 * r4, poly({"1", "-4"}, 3));
  PowerSeries r2 = sqrt_series(poly({"1", "-2"}, 3));
  EXPECT_EQ(r2, poly({"1", "-1", "-1/2"}, 3));
  EXPECT_EQ(r2 * r2, poly({"1", "-2"}, 3));
  EXPECT_EQ(error_kind([] { sqrt_series(poly({"4", "1"}, 3)); }), ErrorKind::constant_term_not_one);
}

TEST(SqrtSeries, SquaresBackForRandomPolynomials) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 30; ++i) {
    PowerSeries a = random_series(rng, 10, true);
    PowerSeries r = sqrt_series(a);
    EXPECT_EQ(r[0], Rational(1));
    EXPECT_EQ(r * r, a);
  }
}

TEST(SqrtSeries, MatchesCentralBinomialExpansion) {
  // sqrt(1-4x) = 1 - 2 sum_{k>=1} C_{k-1} x^k
  PowerSeries r = sqrt_series(poly({"1", "-4"}, 20));
  for (std::size_t k = 1; k < 20; ++k) EXPECT_EQ(r[k], Rational(-2) * Rational(catalan(k - 1)));
}

TEST(Compose, Examples) {
  EXPECT_EQ(compose(poly({"1", "1"}, 3), poly({"0", "0", "1"}, 3)), poly({"1", "0", "1"}, 3));
  EXPECT_EQ(compose(poly({"5", "3", "7"}, 3), PowerSeries(3)), poly({"5"}, 3));
  PowerSeries geometric = poly({"1", "1", "1"}, 3);
  EXPECT_EQ(compose(geometric, poly({"0", "2"}, 3)), reciprocal(poly({"1", "-2"}, 3)));
  EXPECT_EQ(error_kind([] { compose(poly({"1"}, 3), poly({"1", "1"}, 3)); }),
            ErrorKind::nonzero_inner_constant);
}

TEST(Arctan, Examples) {
  EXPECT_EQ(arctan_series(poly({"0", "1"}, 4)), poly({"0", "1", "0", "-1/3"}, 4));
  EXPECT_EQ(arctan_series(PowerSeries(5)), PowerSeries(5));
  EXPECT_EQ(error_kind([] { arctan_series(poly({"1"}, 3)); }), ErrorKind::nonzero_inner_constant);
}

TEST(Arctan, CompositionAndIntegrationAgree) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    PowerSeries u = random_series(rng, 10, false);
    u = u - PowerSeries::constant(u[0], 10);
    EXPECT_EQ(arctan_series(u), arctan_series_by_integration(u));
  }
}

TEST(Arctan, DerivativeIdentity) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    PowerSeries u = random_series(rng, 12, false);
    u = u - PowerSeries::constant(u[0], 12);
    PowerSeries lhs = derivative(arctan_series(u));
    PowerSeries v = u.truncated(11);
    PowerSeries rhs = derivative(u) * reciprocal(PowerSeries::constant(Rational(1), 11) + v * v);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Arctan, GridGeneratingFunctionLeadingTerms) {
  PowerSeries a = grid2_egf(4);
  EXPECT_EQ(a[0], Rational(0));
  EXPECT_EQ(egf_term(a, 1), Rational(2));
  EXPECT_EQ(egf_term(a, 2), Rational(16));
  EXPECT_EQ(egf_term(a, 3), Rational(208));
}

TEST(EgfCoefficient, A182525Examples) {
  PowerSeries a = a182525_egf(8);
  EXPECT_EQ(egf_term(a, 0), Rational(1));
  EXPECT_EQ(egf_term(a, 1), Rational(2));
  EXPECT_EQ(egf_term(a, 2), Rational(10));
  EXPECT_EQ(egf_coefficient(a, 2), Rational(5));
  EXPECT_EQ(error_kind([&] { egf_coefficient(a, 8); }), ErrorKind::index_out_of_range);
}

TEST(GeneratingFunctions, TwentyFiveTerms) {
  PowerSeries g = grid2_egf();
  PowerSeries h = a087547_scaled_ogf();
  PowerSeries k = a182525_egf();
  EXPECT_EQ(g.order(), kDefaultSeriesOrder);
  for (std::size_t n = 1; n <= 25; ++n) {
    EXPECT_EQ(egf_term(g, n), Rational(labelings_grid2(n))) << n;
    EXPECT_EQ(factorial_scaled_coefficient(h, n, n - 1), Rational(a087547_rec(n))) << n;
  }
  for (std::size_t n = 0; n <= 25; ++n) EXPECT_EQ(egf_term(k, n), Rational(a182525_sum(n))) << n;
}

TEST(Calculus, DerivativeAndIntegralAreInverse) {
  PowerSeries a = poly({"3", "1/2", "-4", "7/3"}, 4);
  EXPECT_EQ(derivative(integral(a)), a);
  EXPECT_EQ(integral(a).order(), 5u);
  EXPECT_EQ(derivative(a), poly({"1/2", "-8", "7"}, 3));
}

}  // namespace
}  // namespace rwl
