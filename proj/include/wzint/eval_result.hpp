#ifndef WZINT_EVAL_RESULT_HPP
#define WZINT_EVAL_RESULT_HPP

#include "wzint/rational.hpp"

#include <chrono>
#include <cstdint>
#include <string>

namespace wzint {

// One evaluation cell for tables and benchmarks. term_count is the
// method's own work measure: expanded monomials for the oracle,
// recurrence steps for the recurrence, enumerated chains for the
// nested-sum form.
struct EvalResult {
  unsigned k = 0;
  unsigned m = 0;
  unsigned n = 0;
  std::string method;
  Rational value;
  std::uint64_t term_count = 0;
  std::chrono::microseconds wall{0};
};

} // namespace wzint

#endif
