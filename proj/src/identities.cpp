#include "rwl/identities.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include <mpfr.h>

#include "rwl/formulas.hpp"
#include "rwl/generating_functions.hpp"
#include "rwl/graph.hpp"
#include "rwl/parallel.hpp"
#include "rwl/walk.hpp"

namespace rwl {

unsigned default_thread_count() {
  if (const char* env = std::getenv("RWL_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

constexpr std::size_t kRecordedTerms = 10;

// Compares n -> lhs(n) against n -> rhs(n) for n in [lo, hi].
template <class Check>
VerificationResult sweep(std::string claim, std::size_t lo, std::size_t hi, unsigned threads,
                         Check check) {
  const auto t0 = Clock::now();
  VerificationResult r;
  r.claim = std::move(claim);
  r.n_min = lo;
  r.n_max = hi;
  const std::size_t count = hi >= lo ? hi - lo + 1 : 0;
  std::vector<std::optional<std::string>> failures(count);
  std::vector<std::string> values(count);
  parallel_for(0, count, threads, [&](std::size_t i) {
    try {
      failures[i] = check(lo + i, values[i]);
    } catch (const std::exception& e) {
      failures[i] = "n=" + std::to_string(lo + i) + ": " + e.what();
    }
  });
  r.passed = true;
  for (std::size_t i = 0; i < count; ++i) {
    if (failures[i]) {
      r.passed = false;
      r.counterexample = failures[i];
      break;
    }
  }
  for (std::size_t i = 0; i < std::min(count, kRecordedTerms); ++i) r.terms.push_back(values[i]);
  r.elapsed_ms = ms_since(t0);
  return r;
}

std::optional<std::string> mismatch(std::size_t n, const Rational& a, const Rational& b,
                                    std::string_view what) {
  if (a == b) return std::nullopt;
  return "n=" + std::to_string(n) + ": " + std::string(what) + " " + a.to_string() +
         " != " + b.to_string();
}

VerificationResult verify_series(std::string claim, const PowerSeries& series, std::size_t first,
                                 std::size_t terms, auto scale_of, auto expected_of,
                                 Clock::time_point t0) {
  VerificationResult r;
  r.claim = std::move(claim);
  r.n_min = first;
  r.n_max = terms;
  r.passed = true;
  for (std::size_t n = first; n <= terms; ++n) {
    Rational got = factorial_scaled_coefficient(series, n, scale_of(n));
    Rational want = expected_of(n);
    r.terms.push_back(got.to_string());
    if (got != want && !r.counterexample) {
      r.passed = false;
      r.counterexample = "n=" + std::to_string(n) + ": series term " + got.to_string() +
                         " != sequence value " + want.to_string();
    }
  }
  r.elapsed_ms = ms_since(t0);
  return r;
}

std::size_t series_order_for(std::size_t terms) { return std::max(terms + 1, kDefaultSeriesOrder); }

// RAII wrapper for a 256-bit MPFR float.
class BigFloat {
public:
  BigFloat() { mpfr_init2(v_, 256); }
  ~BigFloat() { mpfr_clear(v_); }
  BigFloat(const BigFloat&) = delete;
  BigFloat& operator=(const BigFloat&) = delete;
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  std::string str(int digits) const {
    char* buf = nullptr;
    std::string fmt = "%." + std::to_string(digits - 1) + "Re";
    mpfr_asprintf(&buf, fmt.c_str(), v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

private:
  mpfr_t v_;
};

}  // namespace

std::string_view claim_id(TheoremClaim claim) {
  switch (claim) {
    case TheoremClaim::grid2_equals_a087923: return "eq915";
    case TheoremClaim::a087547_sum_equals_rec: return "eq771";
    case TheoremClaim::bala_identity: return "eq003";
    case TheoremClaim::bala_forms_agree: return "eq900-vs-901";
  }
  return "unknown";
}

std::optional<TheoremClaim> parse_theorem_claim(std::string_view id) {
  for (auto c : {TheoremClaim::grid2_equals_a087923, TheoremClaim::a087547_sum_equals_rec,
                 TheoremClaim::bala_identity, TheoremClaim::bala_forms_agree}) {
    if (claim_id(c) == id) return c;
  }
  return std::nullopt;
}

VerificationResult verify_theorem(TheoremClaim claim, std::size_t n_max, unsigned threads) {
  std::string id(claim_id(claim));
  switch (claim) {
    case TheoremClaim::grid2_equals_a087923:
      return sweep(id, 1, n_max, threads, [](std::size_t n, std::string& v) {
        Natural lhs = labelings_grid2(n);
        v = lhs.to_string();
        return mismatch(n, lhs, grid2_a087923(n), "grid2 sum vs A087923 sum");
      });
    case TheoremClaim::a087547_sum_equals_rec:
      return sweep(id, 1, n_max, threads, [](std::size_t n, std::string& v) {
        Natural lhs = a087547_sum(n);
        v = lhs.to_string();
        return mismatch(n, lhs, a087547_rec(n), "sum form vs recursion");
      });
    case TheoremClaim::bala_identity:
      return sweep(id, 1, n_max, threads, [](std::size_t n, std::string& v) {
        Rational lhs = bala_lhs(n);
        v = lhs.to_string();
        return mismatch(n, lhs, bala_rhs(n), "lhs vs rhs");
      });
    case TheoremClaim::bala_forms_agree:
      return sweep(id, 1, n_max, threads, [](std::size_t n, std::string& v) -> std::optional<std::string> {
        Rational product = bala_product_form(n);
        Rational sum = bala_sum_form(n);
        v = product.to_string();
        if (auto m = mismatch(n, product, sum, "product form vs sum form")) return m;
        if (!product.is_integer()) {
          return "n=" + std::to_string(n) + ": value is not integral: " + product.to_string();
        }
        return std::nullopt;
      });
  }
  throw Error(ErrorKind::invalid_spec, "unknown theorem claim");
}

VerificationResult verify_egf_gg2(std::size_t terms) {
  const auto t0 = Clock::now();
  auto series = grid2_egf(series_order_for(terms));
  return verify_series(
      "egf-gg2", series, 1, terms, [](std::size_t n) { return n; },
      [](std::size_t n) { return Rational(labelings_grid2(n)); }, t0);
}

VerificationResult verify_ogf_a087547(std::size_t terms) {
  const auto t0 = Clock::now();
  auto series = a087547_scaled_ogf(series_order_for(terms));
  return verify_series(
      "ogf-a087547", series, 1, terms, [](std::size_t n) { return n - 1; },
      [](std::size_t n) { return Rational(a087547_rec(n)); }, t0);
}

VerificationResult verify_egf_a182525(std::size_t terms) {
  const auto t0 = Clock::now();
  auto series = a182525_egf(series_order_for(terms));
  return verify_series(
      "egf-a182525", series, 0, terms, [](std::size_t n) { return n; },
      [](std::size_t n) { return Rational(a182525_sum(n)); }, t0);
}

VerificationResult verify_lemma37(std::size_t n_max, double tol, const QuadratureOptions& quad) {
  const auto t0 = Clock::now();
  VerificationResult r;
  r.claim = "lemma37";
  r.n_min = 1;
  r.n_max = n_max;
  r.passed = true;
  constexpr double kHalfPi = std::numbers::pi / 2;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const double dn = static_cast<double>(n);
    const auto odd = [n](double t) {
      const double s = std::sin(2 * t);
      return std::pow(1 + s, static_cast<double>(n)) - std::pow(1 - s, static_cast<double>(n));
    };
    const auto even = [n](double t) {
      const double c = std::cos(t), s = std::sin(t);
      const double e = static_cast<double>(2 * n - 1);
      return c * (std::pow(c + s, e) - std::pow(c - s, e));
    };
    struct Side {
      const char* label;
      Rational exact;
      QuadratureResult q;
      double scale;
    };
    Side sides[] = {
        {"odd", inverse_binomial_odd_sum(n), adaptive_simpson(odd, 0, kHalfPi, quad), (2 * dn + 1) / 2},
        {"even", inverse_binomial_even_sum(n), adaptive_simpson(even, 0, kHalfPi, quad), dn},
    };
    for (auto& side : sides) {
      NumericSample s;
      s.n = n;
      s.label = side.label;
      s.exact = side.exact.to_string();
      s.numeric = 1 + side.scale * side.q.value;
      const double exact = side.exact.to_double();
      s.residual = std::abs(s.numeric - exact) / std::max(1.0, std::abs(exact));
      r.max_residual = std::max(r.max_residual, s.residual);
      if ((s.residual > tol || !side.q.converged) && !r.counterexample) {
        r.passed = false;
        std::ostringstream os;
        os.precision(15);
        os << "n=" << n << " (" << side.label << "): residual " << s.residual << " exceeds " << tol;
        if (!side.q.converged) os << " (quadrature hit its subinterval cap)";
        r.counterexample = os.str();
      }
      r.samples.push_back(std::move(s));
    }
  }
  r.elapsed_ms = ms_since(t0);
  return r;
}

VerificationResult check_asymptotic_gg2(const std::vector<std::size_t>& ns) {
  const auto t0 = Clock::now();
  VerificationResult r;
  r.claim = "asymptotic";
  r.n_min = ns.empty() ? 0 : ns.front();
  r.n_max = ns.empty() ? 0 : ns.back();
  r.passed = true;
  BigFloat prev_gap;
  bool have_prev = false;
  std::size_t prev_n = 0;
  for (std::size_t n : ns) {
    Natural exact = labelings_grid2(n);
    BigFloat num, den, tmp, ratio, gap;
    mpfr_set_z(num.get(), exact.mpz().get_mpz_t(), MPFR_RNDN);
    mpfr_const_pi(den.get(), MPFR_RNDN);
    mpfr_mul_ui(den.get(), den.get(), n, MPFR_RNDN);
    mpfr_sqrt(den.get(), den.get(), MPFR_RNDN);
    mpfr_set_z(tmp.get(), factorial(n).mpz().get_mpz_t(), MPFR_RNDN);
    mpfr_mul(den.get(), den.get(), tmp.get(), MPFR_RNDN);
    mpfr_mul_2si(den.get(), den.get(), 2 * static_cast<long>(n) - 3, MPFR_RNDN);
    mpfr_div(ratio.get(), num.get(), den.get(), MPFR_RNDN);
    mpfr_sub_ui(gap.get(), ratio.get(), 1, MPFR_RNDN);
    mpfr_abs(gap.get(), gap.get(), MPFR_RNDN);

    NumericSample s;
    s.n = n;
    s.label = "ratio";
    s.exact = exact.to_string();
    s.numeric = mpfr_get_d(ratio.get(), MPFR_RNDN);
    s.residual = mpfr_get_d(gap.get(), MPFR_RNDN);
    s.high_precision = ratio.str(30);
    r.samples.push_back(s);
    r.max_residual = std::max(r.max_residual, s.residual);

    if (have_prev && (n <= prev_n || mpfr_cmp(gap.get(), prev_gap.get()) >= 0) && !r.counterexample) {
      r.passed = false;
      r.counterexample = "|r_n - 1| did not decrease from n=" + std::to_string(prev_n) +
                         " to n=" + std::to_string(n);
    }
    mpfr_set(prev_gap.get(), gap.get(), MPFR_RNDN);
    have_prev = true;
    prev_n = n;
  }
  r.elapsed_ms = ms_since(t0);
  return r;
}

VerificationResult verify_oracle_equivalence(std::size_t n_max, std::size_t random_graphs,
                                             std::size_t random_max_order, std::uint64_t seed) {
  const auto t0 = Clock::now();
  VerificationResult r;
  r.claim = "oracle-equivalence";
  r.n_min = 1;
  r.n_max = n_max;
  r.passed = true;

  std::vector<Graph> graphs;
  for (const auto& spec : family_specs_up_to(n_max)) graphs.push_back(build_family(spec));
  std::mt19937_64 rng(seed);
  if (random_max_order > 0) {
    std::uniform_int_distribution<std::size_t> order(1, random_max_order);
    std::uniform_real_distribution<double> density(0.0, 0.6);
    for (std::size_t i = 0; i < random_graphs; ++i) {
      graphs.push_back(random_connected_graph(order(rng), density(rng), rng));
    }
  }
  for (const auto& g : graphs) {
    const auto walk = enumerate_labelings_walk(g).size();
    const Natural dp = count_labelings_dp(g);
    if (Natural(walk) != dp && !r.counterexample) {
      r.passed = false;
      r.counterexample = (g.name().empty() ? std::string("graph") : g.name()) + ": walk " +
                         std::to_string(walk) + " != dp " + dp.to_string() + "\n" + render_graph(g);
    }
  }
  r.terms.push_back(std::to_string(graphs.size()) + " graphs");
  r.elapsed_ms = ms_since(t0);
  return r;
}

}  // namespace rwl
