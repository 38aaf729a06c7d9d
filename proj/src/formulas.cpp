#include "rwl/formulas.hpp"

#include <array>
#include <string>

namespace rwl {

namespace {

constexpr std::array<std::pair<FormulaId, std::string_view>, 11> kNames{{
    {FormulaId::complete, "complete"},
    {FormulaId::path, "path"},
    {FormulaId::cycle, "cycle"},
    {FormulaId::king2, "king2"},
    {FormulaId::grid2_binomial_inverse, "grid2"},
    {FormulaId::grid2_a087923, "a087923"},
    {FormulaId::a087547_sum, "a087547-sum"},
    {FormulaId::a087547_rec, "a087547-rec"},
    {FormulaId::bala_lhs, "bala-lhs"},
    {FormulaId::bala_rhs, "bala-rhs"},
    {FormulaId::a182525_sum, "a182525"},
}};

void require_n(std::size_t n, std::size_t lo, const char* what) {
  if (n < lo) {
    throw Error(ErrorKind::invalid_n, std::string(what) + ": n must be at least " +
                                          std::to_string(lo) + ", got " + std::to_string(n));
  }
}

Natural require_integral(const Rational& r, const char* what, std::size_t n) {
  if (!r.is_integer() || r.sign() < 0) {
    throw Error(ErrorKind::non_integral, std::string(what) + "(" + std::to_string(n) +
                                             ") evaluated to non-integral " + r.to_string());
  }
  return r.to_natural();
}

mpz_class fact(std::size_t k) { return factorial(k).mpz(); }
mpz_class binom(long long n, long long k) { return binomial(n, k).mpz(); }
mpz_class two_pow(std::size_t e) { return pow2(e).mpz(); }

long long ll(std::size_t v) { return static_cast<long long>(v); }

mpq_class frac(const mpz_class& num, const mpz_class& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

std::string_view to_string(FormulaId id) {
  for (auto [k, name] : kNames)
    if (k == id) return name;
  return "unknown";
}

std::optional<FormulaId> parse_formula_id(std::string_view text) {
  for (auto [k, name] : kNames)
    if (name == text) return k;
  return std::nullopt;
}

std::size_t min_n(FormulaId id) {
  switch (id) {
    case FormulaId::cycle: return 3;
    case FormulaId::a182525_sum: return 0;
    default: return 1;
  }
}

Rational evaluate(FormulaId id, std::size_t n) {
  switch (id) {
    case FormulaId::complete: return labelings_complete(n);
    case FormulaId::path: return labelings_path(n);
    case FormulaId::cycle: return labelings_cycle(n);
    case FormulaId::king2: return labelings_king2(n);
    case FormulaId::grid2_binomial_inverse: return labelings_grid2(n);
    case FormulaId::grid2_a087923: return grid2_a087923(n);
    case FormulaId::a087547_sum: return a087547_sum(n);
    case FormulaId::a087547_rec: return a087547_rec(n);
    case FormulaId::bala_lhs: return bala_lhs(n);
    case FormulaId::bala_rhs: return bala_rhs(n);
    case FormulaId::a182525_sum: return a182525_sum(n);
  }
  throw Error(ErrorKind::invalid_spec, "unknown formula id");
}

Natural labelings_complete(std::size_t n) {
  require_n(n, 1, "complete");
  return factorial(n);
}

Natural labelings_path(std::size_t n) {
  require_n(n, 1, "path");
  return pow2(n - 1);
}

Natural labelings_cycle(std::size_t n) {
  require_n(n, 3, "cycle");
  return Natural(n) * pow2(n - 2);
}

Natural labelings_king2(std::size_t n) {
  require_n(n, 1, "king2");
  return pow2(n - 1) * factorial(n + 1) * catalan(n);
}

Natural king2_first_column_starts(std::size_t n) {
  require_n(n, 1, "king2_first_column_starts");
  return factorial(2 * n).divide_exact(factorial(n));
}

Natural grid2_corner_starts(std::size_t n) {
  require_n(n, 1, "grid2_corner_starts");
  return pow2(n - 1) * factorial(n);
}

Natural labelings_grid2(std::size_t n) {
  require_n(n, 1, "grid2");
  mpq_class sum;
  const mpz_class nn(static_cast<unsigned long>(n));
  for (std::size_t k = 0; k < n; ++k) {
    mpz_class num = nn * binom(2 * ll(n) - 2, 2 * ll(k)) + binom(2 * ll(n) - 1, 2 * ll(k));
    sum += frac(num, binom(ll(n) - 1, ll(k)));
  }
  sum *= two_pow(n - 1) * fact(n - 1);
  return require_integral(Rational(sum), "grid2", n);
}

Natural grid2_a087923(std::size_t n) {
  require_n(n, 1, "a087923");
  mpq_class sum;
  for (std::size_t k = 0; k < n; ++k) {
    const long weight = static_cast<long>(2 * (ll(k) + 1) * (ll(n) - ll(k)) - 1);
    mpz_class num = binom(2 * ll(n) - 2, 2 * ll(k)) * weight;
    mpz_class den = binom(ll(n) - 1, ll(k)) * static_cast<unsigned long>(2 * k + 1);
    sum += frac(num, den);
  }
  sum *= two_pow(n) * fact(n - 1);
  return require_integral(Rational(sum), "a087923", n);
}

Natural a087547_sum(std::size_t n) {
  require_n(n, 1, "a087547_sum");
  mpq_class sum;
  for (std::size_t k = 0; k < n; ++k) {
    sum += frac(binom(2 * ll(n) - 1, 2 * ll(k)), binom(ll(n) - 1, ll(k)));
  }
  sum *= fact(n - 1);
  return require_integral(Rational(sum), "a087547_sum", n);
}

Natural a087547_rec(std::size_t n) {
  require_n(n, 1, "a087547_rec");
  mpz_class a = 1;
  mpz_class f = 1;  // (m-1)!
  for (std::size_t m = 2; m <= n; ++m) {
    f *= static_cast<unsigned long>(m - 1);
    a = a * static_cast<unsigned long>(2 * m - 1) + f;
  }
  return Natural(a);
}

Rational bala_lhs(std::size_t n) {
  require_n(n, 1, "bala_lhs");
  mpq_class sum;
  for (std::size_t k = 0; k < n; ++k) {
    mpz_class num = two_pow(k) * binom(ll(n + k), ll(k));
    mpz_class den = binom(2 * ll(k), ll(k)) * static_cast<unsigned long>(2 * k + 1);
    sum += frac(num, den);
  }
  return Rational(sum);
}

Rational bala_rhs(std::size_t n) {
  require_n(n, 1, "bala_rhs");
  mpq_class sum;
  for (std::size_t k = 0; k < n; ++k) {
    mpz_class den = binom(2 * ll(k), ll(k)) * static_cast<unsigned long>(2 * k + 1);
    sum += frac(two_pow(k), den);
  }
  sum *= frac(binom(2 * ll(n), ll(n)), two_pow(n));
  return Rational(sum);
}

Rational bala_product_form(std::size_t n) {
  require_n(n, 1, "bala_product_form");
  mpq_class sum;
  for (std::size_t k = 0; k < n; ++k) {
    mpz_class fk = fact(k);
    sum += frac(two_pow(k) * fk * fk, fact(2 * k + 1));
  }
  sum *= frac(fact(2 * n), fact(n) * two_pow(n));
  return Rational(sum);
}

Rational bala_sum_form(std::size_t n) {
  require_n(n, 1, "bala_sum_form");
  mpq_class sum;
  for (std::size_t k = 1; k <= n; ++k) {
    sum += frac(two_pow(k - 1) * fact(k - 1) * fact(n + k - 1), fact(2 * k - 1));
  }
  return Rational(sum);
}

Natural a182525_sum(std::size_t n) {
  mpq_class sum;
  for (std::size_t k = 0; k <= n; ++k) {
    sum += frac(binom(2 * ll(n), 2 * ll(k)), binom(ll(n), ll(k)));
  }
  sum *= fact(n);
  return require_integral(Rational(sum), "a182525", n);
}

Rational inverse_binomial_odd_sum(std::size_t n) {
  mpq_class sum;
  for (std::size_t k = 0; k <= n; ++k) {
    sum += frac(binom(2 * ll(n) + 1, 2 * ll(k)), binom(ll(n), ll(k)));
  }
  return Rational(sum);
}

Rational inverse_binomial_even_sum(std::size_t n) {
  mpq_class sum;
  for (std::size_t k = 0; k <= n; ++k) {
    sum += frac(binom(2 * ll(n), 2 * ll(k)), binom(ll(n), ll(k)));
  }
  return Rational(sum);
}

std::optional<FamilyCount> formula_for_family(const FamilySpec& spec) {
  spec.validate();
  auto make = [](FormulaId id, std::size_t n) {
    return FamilyCount{id, n, evaluate(id, n).to_natural()};
  };
  switch (spec.kind) {
    case FamilyKind::complete: return make(FormulaId::complete, spec.n);
    case FamilyKind::path: return make(FormulaId::path, spec.n);
    case FamilyKind::cycle: return make(FormulaId::cycle, spec.n);
    case FamilyKind::king:
    case FamilyKind::grid: {
      const FormulaId two_rows =
          spec.kind == FamilyKind::king ? FormulaId::king2 : FormulaId::grid2_binomial_inverse;
      if (spec.m == 1) return make(FormulaId::path, spec.n);
      if (spec.n == 1) return make(FormulaId::path, spec.m);
      if (spec.m == 2) return make(two_rows, spec.n);
      if (spec.n == 2) return make(two_rows, spec.m);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace rwl
