#ifndef WZINT_CLOSEDFORM_HPP
#define WZINT_CLOSEDFORM_HPP

#include "wzint/eval_result.hpp"
#include "wzint/rational.hpp"

#include <cstdint>

namespace wzint {

// T_k(m) by dynamic programming over the (k, m) grid:
//   T_1(m) = 0,  T_k(0) = 1 for k >= 2,
//   T_k(m) = T_k(m-1) + (k(k-2))^m ((k-1)/2)_m / ((k-1)^{2m} (k/2)_m) * T_{k-1}(m).
Rational t_value(unsigned k, unsigned m);

// Same computation, also reporting the number of recurrence increments
// applied (the O(mk) work measure).
struct TValueStats {
  Rational value;
  std::uint64_t steps = 0;
};
TValueStats t_value_stats(unsigned k, unsigned m);

// Shared prefactor m! (2m+n+k-1)! (k/2)_m / (2m+k-1)! * (2(k-1)/k)^m.
Rational prefactor(unsigned k, unsigned m, unsigned n);

// Nested-sum factor: 1 plus, for each chain length r = 1..k-2, the sum
// over weakly decreasing chains 1 <= s_r <= ... <= s_1 <= m of the
// products of per-level Pochhammer ratios. chain_count is the number of
// enumerated chains.
struct BracketResult {
  Rational value;
  std::uint64_t chain_count = 0;
};
BracketResult corollary_bracket(unsigned k, unsigned m);

// Number of chains corollary_bracket enumerates: sum over r of the
// multiset count C(m+r-1, r).
std::uint64_t corollary_chain_count(unsigned k, unsigned m);

// Right side via the recurrence. Domain: k >= 2, or k = 1 with m >= 1;
// (k, m) = (1, 0) is rejected.
EvalResult rhs_theorem(unsigned k, unsigned m, unsigned n);

// Right side via the nested sum. Domain: k >= 2.
EvalResult rhs_corollary(unsigned k, unsigned m, unsigned n);

} // namespace wzint

#endif
