#include "wzint/closedform.hpp"

#include <chrono>
#include <stdexcept>
#include <vector>

namespace wzint {

TValueStats t_value_stats(unsigned k, unsigned m) {
  if (k < 1)
    throw std::invalid_argument("t_value: k must be >= 1");
  TValueStats stats;
  // Row j of the table holds T_j(0..m); row 1 is identically zero.
  std::vector<Rational> prev(m + 1, Rational(0));
  std::vector<Rational> row(m + 1);
  if (k == 1) {
    stats.value = Rational(0);
    return stats;
  }
  for (unsigned j = 2; j <= k; ++j) {
    row.assign(m + 1, Rational(1));
    // Incremental recurrence coefficient:
    //   c_j(i) = c_j(i-1) * j(j-2) ((j-1)/2 + i-1) / ((j-1)^2 (j/2 + i-1)).
    const Rational step_num(static_cast<long>(j) * (static_cast<long>(j) - 2));
    const Rational step_den(static_cast<long>(j - 1) * static_cast<long>(j - 1));
    Rational coeff(1);
    for (unsigned i = 1; i <= m; ++i) {
      coeff *= step_num * (Rational(static_cast<long>(j) - 1, 2) + Rational(static_cast<long>(i) - 1));
      coeff /= step_den * (Rational(static_cast<long>(j), 2) + Rational(static_cast<long>(i) - 1));
      row[i] = row[i - 1] + coeff * prev[i];
      ++stats.steps;
    }
    prev.swap(row);
  }
  stats.value = prev[m];
  return stats;
}

Rational t_value(unsigned k, unsigned m) { return t_value_stats(k, m).value; }

Rational prefactor(unsigned k, unsigned m, unsigned n) {
  const Rational half_k(static_cast<long>(k), 2);
  Rational r = factorial(m) * factorial(2ul * m + n + k - 1) *
               rising_factorial(half_k, m) / factorial(2ul * m + k - 1);
  r *= Rational(2l * (static_cast<long>(k) - 1), static_cast<long>(k))
           .pow(static_cast<long>(m));
  return r;
}

BracketResult corollary_bracket(unsigned k, unsigned m) {
  if (k < 2)
    throw std::domain_error("corollary_bracket: k must be >= 2");
  BracketResult res;
  res.value = Rational(1);
  if (k == 2 || m == 0)
    return res; // outer sum over r = 1..k-2 is empty, or no chain fits

  // factor[i-1][s] = ((k-i)^2 - 1)^s ((k-i)/2)_s / ((k-i)^{2s} ((k-i+1)/2)_s)
  const unsigned depth = k - 2;
  std::vector<std::vector<Rational>> factor(depth);
  for (unsigned i = 1; i <= depth; ++i) {
    const long b = static_cast<long>(k) - static_cast<long>(i);
    auto &tab = factor[i - 1];
    tab.assign(m + 1, Rational(1));
    for (unsigned s = 1; s <= m; ++s) {
      tab[s] = tab[s - 1] * Rational(b * b - 1) *
               (Rational(b, 2) + Rational(static_cast<long>(s) - 1)) /
               (Rational(b * b) *
                (Rational(b + 1, 2) + Rational(static_cast<long>(s) - 1)));
    }
  }

  // Lexicographic enumeration of chains (r, s_1, ..., s_r); each chain is
  // visited once, extending the prefix product of its parent.
  struct Enumerator {
    const std::vector<std::vector<Rational>> &factor;
    unsigned depth;
    BracketResult &res;
    void walk(unsigned i, unsigned s_max, const Rational &prefix) {
      for (unsigned s = 1; s <= s_max; ++s) {
        const Rational prod = prefix * factor[i - 1][s];
        res.value += prod;
        ++res.chain_count;
        if (i < depth)
          walk(i + 1, s, prod);
      }
    }
  };
  Enumerator{factor, depth, res}.walk(1, m, Rational(1));
  return res;
}

std::uint64_t corollary_chain_count(unsigned k, unsigned m) {
  if (k < 2)
    throw std::domain_error("corollary_chain_count: k must be >= 2");
  std::uint64_t total = 0;
  for (unsigned r = 1; r + 2 <= k; ++r)
    total += binomial(m + r - 1, r).get_ui();
  return total;
}

namespace {
EvalResult make_result(unsigned k, unsigned m, unsigned n, std::string method,
                       Rational value, std::uint64_t terms,
                       std::chrono::steady_clock::time_point start) {
  EvalResult res;
  res.k = k;
  res.m = m;
  res.n = n;
  res.method = std::move(method);
  res.value = std::move(value);
  res.term_count = terms;
  res.wall = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return res;
}
} // namespace

EvalResult rhs_theorem(unsigned k, unsigned m, unsigned n) {
  if (k < 1)
    throw std::invalid_argument("rhs_theorem: k must be >= 1");
  if (k == 1 && m == 0)
    throw std::domain_error(
        "rhs_theorem: (k, m) = (1, 0) is outside the comparable domain; "
        "the closed form gives 0 while the integral is n!");
  const auto start = std::chrono::steady_clock::now();
  const TValueStats t = t_value_stats(k, m);
  return make_result(k, m, n, "recurrence", prefactor(k, m, n) * t.value,
                     t.steps, start);
}

EvalResult rhs_corollary(unsigned k, unsigned m, unsigned n) {
  if (k < 2)
    throw std::domain_error("rhs_corollary: the nested-sum form needs k >= 2");
  const auto start = std::chrono::steady_clock::now();
  const BracketResult b = corollary_bracket(k, m);
  return make_result(k, m, n, "corollary", prefactor(k, m, n) * b.value,
                     b.chain_count, start);
}

} // namespace wzint
