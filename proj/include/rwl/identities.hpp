#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rwl/quadrature.hpp"
#include "rwl/series.hpp"

namespace rwl {

// One numeric comparison: an exact value against a floating point evaluation.
struct NumericSample {
  std::size_t n = 0;
  std::string label;
  std::string exact;      // exact decimal or rational string
  double numeric = 0;     // integral side, or ratio for asymptotics
  double residual = 0;    // |numeric - exact| / max(1, |exact|), or |r - 1|
  std::string high_precision;  // ratio to 30 significant digits (asymptotics only)
};

struct VerificationResult {
  std::string claim;
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  bool passed = false;
  std::optional<std::string> counterexample;
  std::vector<std::string> terms;  // exact sequence values, when the claim produces them
  std::vector<NumericSample> samples;
  double max_residual = 0;
  double elapsed_ms = 0;
};

// Exact identities between two closed forms, each evaluated independently.
enum class TheoremClaim {
  grid2_equals_a087923,    // binomial-inverse grid count == A087923 sum form
  a087547_sum_equals_rec,  // A087547 sum form == recursion
  bala_identity,           // bala_lhs == bala_rhs
  bala_forms_agree,        // product form == sum form, both integral
};

std::string_view claim_id(TheoremClaim claim);
std::optional<TheoremClaim> parse_theorem_claim(std::string_view id);

// Sweeps 1..n_max with `threads` workers; the first failing n (smallest) is
// reported as the counterexample.
VerificationResult verify_theorem(TheoremClaim claim, std::size_t n_max, unsigned threads = 1);

// Generating function checks. `terms` is the largest index compared; the
// series is expanded to max(terms + 1, kDefaultSeriesOrder) coefficients.
VerificationResult verify_egf_gg2(std::size_t terms);
VerificationResult verify_ogf_a087547(std::size_t terms);
VerificationResult verify_egf_a182525(std::size_t terms);

// Both integral representations of the inverse binomial sums for 1..n_max.
VerificationResult verify_lemma37(std::size_t n_max, double tol,
                                  const QuadratureOptions& quad = {});

// Ratio of the exact 2 x n grid count to sqrt(pi n) n! 2^(2n-3) at each n;
// passes when |r - 1| strictly decreases along ns.
VerificationResult check_asymptotic_gg2(const std::vector<std::size_t>& ns);

// Walk enumerator vs subset DP on every family graph of order <= n_max plus
// `random_graphs` random connected graphs with 1..random_max_order vertices.
VerificationResult verify_oracle_equivalence(std::size_t n_max, std::size_t random_graphs = 200,
                                             std::size_t random_max_order = 7,
                                             std::uint64_t seed = 20240601);

}  // namespace rwl
