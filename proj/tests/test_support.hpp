#ifndef WZINT_TEST_SUPPORT_HPP
#define WZINT_TEST_SUPPORT_HPP

#include "wzint/poly.hpp"
#include "wzint/rational.hpp"

#include <map>
#include <random>

namespace wzint::testing {

inline Rational random_rational(std::mt19937 &rng, long max_abs = 20) {
  std::uniform_int_distribution<long> num(-max_abs, max_abs);
  std::uniform_int_distribution<long> den(1, max_abs);
  return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937 &rng, long max_abs = 20) {
  for (;;) {
    Rational r = random_rational(rng, max_abs);
    if (!r.is_zero())
      return r;
  }
}

inline Poly random_poly(std::mt19937 &rng, const VarSet &vars,
                        unsigned max_terms = 5, unsigned max_exp = 3) {
  std::uniform_int_distribution<unsigned> nterms(0, max_terms);
  std::uniform_int_distribution<unsigned> nvars(0, vars.count());
  std::uniform_int_distribution<VarIndex> var(1, vars.count());
  std::uniform_int_distribution<unsigned> exp(1, max_exp);
  Poly p(vars);
  const unsigned t = nterms(rng);
  for (unsigned i = 0; i < t; ++i) {
    std::map<VarIndex, unsigned> exps;
    const unsigned v = nvars(rng);
    for (unsigned j = 0; j < v; ++j)
      exps[var(rng)] = exp(rng);
    Monomial mono;
    for (auto &[vi, e] : exps)
      mono.exps.emplace_back(vi, e);
    p.add_term(mono, random_rational(rng));
  }
  return p;
}

inline std::map<VarIndex, Rational> random_point(std::mt19937 &rng,
                                                 const VarSet &vars,
                                                 long max_abs = 20) {
  std::map<VarIndex, Rational> pt;
  for (VarIndex v = 1; v <= vars.count(); ++v)
    pt[v] = random_rational(rng, max_abs);
  return pt;
}

} // namespace wzint::testing

#endif
