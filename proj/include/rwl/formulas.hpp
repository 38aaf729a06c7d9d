#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "rwl/error.hpp"
#include "rwl/exact.hpp"
#include "rwl/graph.hpp"

namespace rwl {

// Closed-form counts. Every function throws Error{invalid_n} below its
// minimum n; sums the theory says are integral throw Error{non_integral} if
// exact evaluation leaves a denominator.
enum class FormulaId {
  complete,
  path,
  cycle,
  king2,
  grid2_binomial_inverse,  // 2^(n-1)(n-1)! sum (n C(2n-2,2k) + C(2n-1,2k)) / C(n-1,k)
  grid2_a087923,           // 2^n (n-1)! sum C(2n-2,2k)(2(k+1)(n-k)-1) / (C(n-1,k)(2k+1))
  a087547_sum,
  a087547_rec,
  bala_lhs,
  bala_rhs,
  a182525_sum,
};

std::string_view to_string(FormulaId id);
std::optional<FormulaId> parse_formula_id(std::string_view text);
std::size_t min_n(FormulaId id);
Rational evaluate(FormulaId id, std::size_t n);

// n!
Natural labelings_complete(std::size_t n);
// 2^(n-1)
Natural labelings_path(std::size_t n);
// n 2^(n-2), n >= 3
Natural labelings_cycle(std::size_t n);

// King's graph on a 2 x n board: 2^(n-1) (n+1)! C_n.
Natural labelings_king2(std::size_t n);
// Labelings of the 2 x n king's graph that start in the first column: (2n)!/n!.
Natural king2_first_column_starts(std::size_t n);

// 2 x n grid graph, binomial-inverse sum form.
Natural labelings_grid2(std::size_t n);
// Same count via the A087923 sum form.
Natural grid2_a087923(std::size_t n);
// Labelings of the 2 x n grid that start at the upper-left corner: 2^(n-1) n!.
Natural grid2_corner_starts(std::size_t n);

// (n-1)! sum_{k<n} C(2n-1,2k) / C(n-1,k)
Natural a087547_sum(std::size_t n);
// a_1 = 1, a_n = (2n-1) a_(n-1) + (n-1)!
Natural a087547_rec(std::size_t n);

// sum_{k<n} 2^k C(n+k,k) / ((2k+1) C(2k,k))
Rational bala_lhs(std::size_t n);
// C(2n,n) 2^-n sum_{k<n} 2^k / ((2k+1) C(2k,k))
Rational bala_rhs(std::size_t n);
// (2n)!/(n! 2^n) sum_{k<n} 2^k (k!)^2 / (2k+1)!
Rational bala_product_form(std::size_t n);
// sum_{k=1}^n 2^(k-1) (k-1)! (n+k-1)! / (2k-1)!
Rational bala_sum_form(std::size_t n);

// n! sum_{k<=n} C(2n,2k) / C(n,k), n >= 0
Natural a182525_sum(std::size_t n);

// Exact sides of the two inverse-binomial sums that have integral
// representations over [0, pi/2].
Rational inverse_binomial_odd_sum(std::size_t n);   // sum_{k<=n} C(2n+1,2k) / C(n,k)
Rational inverse_binomial_even_sum(std::size_t n);  // sum_{k<=n} C(2n,2k) / C(n,k)

struct FamilyCount {
  FormulaId formula;
  std::size_t argument;
  Natural value;
};

// Closed-form count for a family graph when one is known: paths, cycles,
// complete graphs, and boards with one or two rows (either orientation).
// Boards with three or more rows in both directions have none.
std::optional<FamilyCount> formula_for_family(const FamilySpec& spec);

}  // namespace rwl
