#include "wzint/oracle.hpp"

#include <chrono>
#include <string>

namespace wzint {

Rational integrate_monomial(const std::vector<unsigned> &exponents) {
  Rational r(1);
  for (unsigned a : exponents)
    r *= factorial(a);
  return r;
}

namespace {
void check_budget(const Poly &p, unsigned k, unsigned m, unsigned n,
                  const OracleBudget &budget) {
  if (p.term_count() > budget.max_terms)
    throw BudgetExceeded("oracle: expansion exceeds " +
                         std::to_string(budget.max_terms) + " terms at (k=" +
                         std::to_string(k) + ", m=" + std::to_string(m) +
                         ", n=" + std::to_string(n) + ")");
}
} // namespace

EvalResult lhs_exact(unsigned k, unsigned m, unsigned n,
                     const OracleBudget &budget) {
  if (k < 1)
    throw std::invalid_argument("oracle: k must be >= 1");
  if (budget.max_terms < 1)
    throw std::invalid_argument("oracle: max_terms must be >= 1");
  const auto start = std::chrono::steady_clock::now();

  const VarSet vars(k, false);
  const Poly e1 = e_sym(vars, 1);
  const Poly e2 = e_sym(vars, 2);

  // Repeated multiplication keeps the intermediate expansions sparse and
  // lets the budget trip before the product blows up.
  Poly integrand = Poly::constant(vars, Rational(1));
  for (unsigned i = 0; i < m; ++i) {
    integrand = integrand * e2;
    check_budget(integrand, k, m, n, budget);
  }
  for (unsigned i = 0; i < n; ++i) {
    integrand = integrand * e1;
    check_budget(integrand, k, m, n, budget);
  }

  Rational total(0);
  for (const auto &[mono, coeff] : integrand.terms()) {
    std::vector<unsigned> exps(k, 0);
    for (auto &[v, e] : mono.exps)
      exps[v - 1] = e;
    total += coeff * integrate_monomial(exps);
  }

  EvalResult res;
  res.k = k;
  res.m = m;
  res.n = n;
  res.method = "oracle";
  res.value = total;
  res.term_count = integrand.term_count();
  res.wall = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return res;
}

} // namespace wzint
