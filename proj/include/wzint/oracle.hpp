#ifndef WZINT_ORACLE_HPP
#define WZINT_ORACLE_HPP

#include "wzint/eval_result.hpp"
#include "wzint/poly.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace wzint {

struct OracleBudget {
  std::uint64_t max_terms = 5'000'000;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Integral of x1^a1 ... xk^ak e^{-(x1+...+xk)} over [0,inf)^k: the product
// of the coordinate factorials.
Rational integrate_monomial(const std::vector<unsigned> &exponents);

// Brute-force left side for concrete (k, m, n): expand e2^m * e1^n and
// integrate term by term against e^{-e1}. Throws BudgetExceeded when the
// expansion would exceed budget.max_terms.
EvalResult lhs_exact(unsigned k, unsigned m, unsigned n,
                     const OracleBudget &budget = {});

} // namespace wzint

#endif
