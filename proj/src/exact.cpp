#include "rwl/exact.hpp"

#include <limits>

namespace rwl {

Natural::Natural(std::uint64_t v) {
  // mpz_class has no unsigned long long constructor on every platform.
  mpz_import(value_.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
}

Natural::Natural(const mpz_class& v) : value_(v) {
  if (sgn(value_) < 0) throw std::domain_error("Natural: negative value " + v.get_str());
}

Natural::Natural(std::string_view decimal) {
  std::string s(decimal);
  if (s.empty() || value_.set_str(s, 10) != 0 || sgn(value_) < 0) {
    throw std::invalid_argument("Natural: not a nonnegative decimal integer: '" + s + "'");
  }
}

bool Natural::fits_u64() const noexcept {
  return mpz_sizeinbase(value_.get_mpz_t(), 2) <= 64;
}

std::uint64_t Natural::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("Natural does not fit in 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof out, 0, 0, value_.get_mpz_t());
  return out;
}

Natural operator-(const Natural& a, const Natural& b) {
  if (b > a) throw std::domain_error("Natural subtraction would be negative");
  return Natural(mpz_class(a.value_ - b.value_));
}

Natural Natural::divide_exact(const Natural& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero");
  if (!mpz_divisible_p(value_.get_mpz_t(), d.value_.get_mpz_t())) {
    throw std::domain_error("inexact division " + to_string() + " / " + d.to_string());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), value_.get_mpz_t(), d.value_.get_mpz_t());
  return Natural(q);
}

Natural Natural::pow(unsigned long e) const {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), value_.get_mpz_t(), e);
  return Natural(r);
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
  if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

Natural Rational::to_natural() const {
  if (!is_integer()) throw std::domain_error("Rational is not integral: " + to_string());
  return Natural(mpz_class(value_.get_num()));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  }
  if (sgn(q.get_den()) == 0) throw std::domain_error("Rational: zero denominator");
  return Rational(q);
}

Natural pow2(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return Natural(r);
}

CombCache::CombCache(std::size_t bound) {
  fact_.reserve(bound + 1);
  fact_.emplace_back(1);
}

void CombCache::grow_locked(std::size_t k) {
  while (fact_.size() <= k) {
    fact_.push_back(fact_.back() * static_cast<unsigned long>(fact_.size()));
  }
}

Natural CombCache::factorial(std::size_t k) {
  std::lock_guard lock(mu_);
  grow_locked(k);
  return Natural(fact_[k]);
}

Natural CombCache::binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return Natural(0);
  auto nn = static_cast<std::size_t>(n);
  auto kk = static_cast<std::size_t>(k);
  std::lock_guard lock(mu_);
  grow_locked(nn);
  mpz_class denom = fact_[kk] * fact_[nn - kk];
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), fact_[nn].get_mpz_t(), denom.get_mpz_t());
  return Natural(q);
}

Natural CombCache::catalan(std::size_t k) {
  return binomial(2 * static_cast<long long>(k), static_cast<long long>(k))
      .divide_exact(Natural(k + 1));
}

std::size_t CombCache::size() const {
  std::lock_guard lock(mu_);
  return fact_.size();
}

CombCache& CombCache::global() {
  static CombCache cache;
  return cache;
}

Natural factorial(std::size_t k) { return CombCache::global().factorial(k); }
Natural binomial(long long n, long long k) { return CombCache::global().binomial(n, k); }
Natural catalan(std::size_t k) { return CombCache::global().catalan(k); }

}  // namespace rwl
