#include "rwl/series.hpp"

namespace rwl {

PowerSeries::PowerSeries(std::size_t order) {
  if (order < 1) throw Error(ErrorKind::order_mismatch, "series order must be at least 1");
  coeffs_.assign(order, Rational(0));
}

PowerSeries::PowerSeries(std::vector<Rational> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
  if (order < 1) throw Error(ErrorKind::order_mismatch, "series order must be at least 1");
  coeffs_.resize(order, Rational(0));
}

PowerSeries PowerSeries::constant(const Rational& c, std::size_t order) {
  PowerSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

PowerSeries PowerSeries::monomial(const Rational& c, std::size_t k, std::size_t order) {
  PowerSeries s(order);
  if (k < order) s.coeffs_[k] = c;
  return s;
}

std::vector<std::string> PowerSeries::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.to_string());
  return out;
}

void PowerSeries::check_same_order(const PowerSeries& o, const char* op) const {
  if (o.order() != order()) {
    throw Error(ErrorKind::order_mismatch, std::string(op) + ": series orders differ (" +
                                               std::to_string(order()) + " vs " +
                                               std::to_string(o.order()) + ")");
  }
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  check_same_order(o, "add");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  check_same_order(o, "sub");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const PowerSeries& o) {
  check_same_order(o, "mul");
  const std::size_t n = order();
  std::vector<mpq_class> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (!o.coeffs_[j].is_zero()) out[i + j] += coeffs_[i].mpq() * o.coeffs_[j].mpq();
    }
  }
  for (std::size_t i = 0; i < n; ++i) coeffs_[i] = Rational(out[i]);
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

PowerSeries add(const PowerSeries& a, const PowerSeries& b) { return a + b; }
PowerSeries sub(const PowerSeries& a, const PowerSeries& b) { return a - b; }
PowerSeries mul(const PowerSeries& a, const PowerSeries& b) { return a * b; }

PowerSeries reciprocal(const PowerSeries& a) {
  if (a[0].is_zero()) throw Error(ErrorKind::zero_constant_term, "reciprocal: constant term is zero");
  const std::size_t n = a.order();
  const mpq_class inv0 = 1 / a[0].mpq();
  std::vector<mpq_class> b(n);
  b[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    mpq_class acc;
    for (std::size_t j = 1; j <= k; ++j) acc += a[j].mpq() * b[k - j];
    b[k] = -inv0 * acc;
  }
  std::vector<Rational> out(b.begin(), b.end());
  return PowerSeries(std::move(out), n);
}

PowerSeries sqrt_series(const PowerSeries& a) {
  if (a[0] != Rational(1)) {
    throw Error(ErrorKind::constant_term_not_one,
                "sqrt_series: constant term is " + a[0].to_string() + ", expected 1");
  }
  // (sum b_i x^i)^2 = a with b_0 = 1 gives 2 b_k = a_k - sum_{0<j<k} b_j b_{k-j}.
  const std::size_t n = a.order();
  std::vector<mpq_class> b(n);
  b[0] = 1;
  for (std::size_t k = 1; k < n; ++k) {
    mpq_class acc = a[k].mpq();
    for (std::size_t j = 1; j < k; ++j) acc -= b[j] * b[k - j];
    b[k] = acc / 2;
  }
  std::vector<Rational> out(b.begin(), b.end());
  return PowerSeries(std::move(out), n);
}

PowerSeries compose(const PowerSeries& outer, const PowerSeries& inner) {
  if (outer.order() != inner.order()) {
    throw Error(ErrorKind::order_mismatch, "compose: series orders differ");
  }
  if (!inner[0].is_zero()) {
    throw Error(ErrorKind::nonzero_inner_constant, "compose: inner series has a nonzero constant term");
  }
  const std::size_t n = outer.order();
  // Horner; inner has no constant term so every power stays within order.
  PowerSeries result = PowerSeries::constant(outer[n - 1], n);
  for (std::size_t i = n - 1; i-- > 0;) {
    result *= inner;
    result += PowerSeries::constant(outer[i], n);
  }
  return result;
}

PowerSeries derivative(const PowerSeries& a) {
  const std::size_t n = a.order();
  if (n == 1) return PowerSeries(1);
  std::vector<Rational> out(n - 1);
  for (std::size_t i = 1; i < n; ++i) out[i - 1] = a[i] * Rational(static_cast<long>(i));
  return PowerSeries(std::move(out), n - 1);
}

PowerSeries integral(const PowerSeries& a) {
  const std::size_t n = a.order();
  std::vector<Rational> out(n + 1);
  for (std::size_t i = 0; i < n; ++i) out[i + 1] = a[i] / Rational(static_cast<long>(i + 1));
  return PowerSeries(std::move(out), n + 1);
}

PowerSeries arctan_series(const PowerSeries& u) {
  if (!u[0].is_zero()) {
    throw Error(ErrorKind::nonzero_inner_constant, "arctan_series: argument has a nonzero constant term");
  }
  const std::size_t n = u.order();
  std::vector<Rational> c(n);
  for (std::size_t k = 1; k < n; k += 2) {
    long sign = ((k - 1) / 2) % 2 == 0 ? 1 : -1;
    c[k] = Rational(mpz_class(sign), mpz_class(static_cast<unsigned long>(k)));
  }
  return compose(PowerSeries(std::move(c), n), u);
}

PowerSeries arctan_series_by_integration(const PowerSeries& u) {
  if (!u[0].is_zero()) {
    throw Error(ErrorKind::nonzero_inner_constant, "arctan_series: argument has a nonzero constant term");
  }
  const std::size_t n = u.order();
  if (n == 1) return PowerSeries(1);
  PowerSeries du = derivative(u);
  PowerSeries v = u.truncated(n - 1);
  PowerSeries denom = PowerSeries::constant(Rational(1), n - 1) + v * v;
  return integral(du * reciprocal(denom));
}

Rational egf_coefficient(const PowerSeries& a, std::size_t n) {
  if (n >= a.order()) {
    throw Error(ErrorKind::index_out_of_range, "coefficient index " + std::to_string(n) +
                                                   " is beyond the truncation order " +
                                                   std::to_string(a.order()));
  }
  return a[n];
}

Rational egf_term(const PowerSeries& a, std::size_t n) {
  return factorial_scaled_coefficient(a, n, n);
}

Rational factorial_scaled_coefficient(const PowerSeries& a, std::size_t n, std::size_t scale) {
  return egf_coefficient(a, n) * Rational(factorial(scale));
}

}  // namespace rwl
