#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "rwl/error.hpp"
#include "rwl/exact.hpp"

namespace rwl {

inline constexpr std::size_t kDefaultSeriesOrder = 32;

// Formal power series truncated to a fixed number of coefficients.
// Coefficient i multiplies x^i; everything from x^order() on is unknown and
// never stored. Binary operations require equal orders.
class PowerSeries {
public:
  // The zero series with `order` coefficients; order must be at least 1.
  explicit PowerSeries(std::size_t order);
  // Pads with zeros or truncates to `order`.
  PowerSeries(std::vector<Rational> coeffs, std::size_t order);
  PowerSeries(std::initializer_list<Rational> coeffs, std::size_t order)
      : PowerSeries(std::vector<Rational>(coeffs), order) {}

  static PowerSeries constant(const Rational& c, std::size_t order);
  // c * x^k (zero if k >= order).
  static PowerSeries monomial(const Rational& c, std::size_t k, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  std::vector<std::string> coeff_strings() const;

  PowerSeries truncated(std::size_t order) const { return PowerSeries(coeffs_, order); }

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  PowerSeries& operator*=(const PowerSeries& o);
  PowerSeries& operator*=(const Rational& c);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const PowerSeries& b) { return a *= b; }
  friend PowerSeries operator*(PowerSeries a, const Rational& c) { return a *= c; }
  friend PowerSeries operator*(const Rational& c, PowerSeries a) { return a *= c; }
  friend PowerSeries operator-(PowerSeries a) { return a *= Rational(-1); }
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
  void check_same_order(const PowerSeries& o, const char* op) const;

  std::vector<Rational> coeffs_;
};

PowerSeries add(const PowerSeries& a, const PowerSeries& b);
PowerSeries sub(const PowerSeries& a, const PowerSeries& b);
PowerSeries mul(const PowerSeries& a, const PowerSeries& b);

// Multiplicative inverse. Throws Error{zero_constant_term}.
PowerSeries reciprocal(const PowerSeries& a);

// Square root with constant term 1. Throws Error{constant_term_not_one}.
PowerSeries sqrt_series(const PowerSeries& a);

// outer(inner(x)). Throws Error{nonzero_inner_constant}.
PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner);

// a' with one fewer coefficient (order - 1, at least 1).
PowerSeries derivative(const PowerSeries& a);
// Antiderivative with zero constant term and one more coefficient.
PowerSeries integral(const PowerSeries& a);

// sum_k (-1)^k u^(2k+1) / (2k+1). Throws Error{nonzero_inner_constant} when
// u has a nonzero constant term.
PowerSeries arctan_series(const PowerSeries& u);
// Same value computed as the antiderivative of u' / (1 + u^2).
PowerSeries arctan_series_by_integration(const PowerSeries& u);

// [x^n] a. Throws Error{index_out_of_range}.
Rational egf_coefficient(const PowerSeries& a, std::size_t n);
// n! [x^n] a.
Rational egf_term(const PowerSeries& a, std::size_t n);
// scale! [x^n] a, e.g. (n-1)! [x^n] for ordinary series indexed from 1.
Rational factorial_scaled_coefficient(const PowerSeries& a, std::size_t n, std::size_t scale);

}  // namespace rwl
