#pragma once

#include <compare>
#include <cstdint>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace rwl {

class Rational;

// Arbitrary-precision nonnegative integer.
class Natural {
public:
  Natural() = default;
  Natural(std::uint64_t v);  // NOLINT(google-explicit-constructor)
  explicit Natural(const mpz_class& v);
  explicit Natural(std::string_view decimal);

  const mpz_class& mpz() const noexcept { return value_; }
  std::string to_string() const { return value_.get_str(); }
  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool fits_u64() const noexcept;
  std::uint64_t to_u64() const;
  double to_double() const { return value_.get_d(); }

  Natural& operator+=(const Natural& o) { value_ += o.value_; return *this; }
  Natural& operator*=(const Natural& o) { value_ *= o.value_; return *this; }

  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
  // Throws std::domain_error when b > a.
  friend Natural operator-(const Natural& a, const Natural& b);
  friend bool operator==(const Natural& a, const Natural& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::ostream& operator<<(std::ostream& os, const Natural& v) { return os << v.to_string(); }

  // Exact division; throws std::domain_error if d does not divide *this.
  Natural divide_exact(const Natural& d) const;
  Natural pow(unsigned long e) const;

private:
  mpz_class value_{0};
};

// Exact fraction, always kept in lowest terms with a positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Natural& v) : value_(v.mpz()) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const mpq_class& v) : value_(v) { value_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den);

  const mpq_class& mpq() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  // Throws std::domain_error unless the value is a nonnegative integer.
  Natural to_natural() const;
  double to_double() const { return value_.get_d(); }
  // "num" when the denominator is 1, otherwise "num/den".
  std::string to_string() const;
  static Rational parse(std::string_view text);

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

private:
  mpq_class value_{0};
};

Natural pow2(unsigned long e);

// Memoized factorials. Lookups are internally synchronized; the table grows on
// demand past the configured bound.
class CombCache {
public:
  explicit CombCache(std::size_t bound = 4096);

  Natural factorial(std::size_t k);
  // Zero when k < 0 or k > n.
  Natural binomial(long long n, long long k);
  Natural catalan(std::size_t k);

  std::size_t size() const;

  static CombCache& global();

private:
  void grow_locked(std::size_t k);

  mutable std::mutex mu_;
  std::vector<mpz_class> fact_;
};

Natural factorial(std::size_t k);
Natural binomial(long long n, long long k);
Natural catalan(std::size_t k);

}  // namespace rwl
