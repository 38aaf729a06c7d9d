#include "rwl/generating_functions.hpp"

namespace rwl {

namespace {

PowerSeries x(std::size_t order) { return PowerSeries::monomial(Rational(1), 1, order); }
// 1 - c x
PowerSeries one_minus(long c, std::size_t order) { return PowerSeries({Rational(1), Rational(-c)}, order); }

}  // namespace

PowerSeries grid2_egf(std::size_t order) {
  const PowerSeries root = sqrt_series(one_minus(4, order));
  const PowerSeries root3 = root * root * root;
  const PowerSeries lin = one_minus(2, order);
  const PowerSeries atan = arctan_series(Rational(2) * x(order) * reciprocal(root));
  const PowerSeries numer = lin * lin * atan + Rational(2) * x(order) * root;
  return numer * reciprocal(Rational(2) * root3);
}

PowerSeries a087547_scaled_ogf(std::size_t order) {
  const PowerSeries root = sqrt_series(one_minus(2, order));
  const PowerSeries root3 = root * root * root;
  const PowerSeries lin = one_minus(1, order);
  const PowerSeries atan = arctan_series(x(order) * reciprocal(root));
  const PowerSeries numer = x(order) * (lin * atan + root);
  return numer * reciprocal(lin * root3);
}

PowerSeries a182525_egf(std::size_t order) {
  const PowerSeries root = sqrt_series(one_minus(2, order));
  const PowerSeries root3 = root * root * root;
  const PowerSeries atan = arctan_series(x(order) * reciprocal(root));
  return (x(order) * atan + root) * reciprocal(root3);
}

}  // namespace rwl
