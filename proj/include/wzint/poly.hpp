#ifndef WZINT_POLY_HPP
#define WZINT_POLY_HPP

#include "wzint/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wzint {

using VarIndex = unsigned;

// Variable scope: x-variables carry stable indices 1..k; when parameters
// are in scope, m is index k+1 and n is index k+2.
struct VarSet {
  unsigned k = 1;
  bool includes_params = false;

  VarSet() = default;
  VarSet(unsigned k_, bool params) : k(k_), includes_params(params) {
    if (k == 0)
      throw std::invalid_argument("VarSet: k must be >= 1");
  }

  unsigned count() const { return k + (includes_params ? 2u : 0u); }
  VarIndex m_var() const {
    require_params();
    return k + 1;
  }
  VarIndex n_var() const {
    require_params();
    return k + 2;
  }
  bool contains(VarIndex v) const { return v >= 1 && v <= count(); }
  std::string name(VarIndex v) const;

  bool operator==(const VarSet &o) const = default;

private:
  void require_params() const {
    if (!includes_params)
      throw std::invalid_argument("VarSet: parameters m, n not in scope");
  }
};

// Exponent vector, sparse: pairs (variable, exponent) sorted by variable,
// exponents strictly positive. The empty monomial is 1.
struct Monomial {
  std::vector<std::pair<VarIndex, unsigned>> exps;

  unsigned degree() const {
    unsigned d = 0;
    for (auto &[v, e] : exps)
      d += e;
    return d;
  }
  unsigned exponent(VarIndex v) const {
    for (auto &[var, e] : exps)
      if (var == v)
        return e;
    return 0;
  }
  bool operator==(const Monomial &o) const = default;
};

// Graded-lex order, x1 < ... < xk < m < n: degree first, ties broken by
// the exponent of the earliest variable where the monomials differ.
struct MonomialLess {
  bool operator()(const Monomial &a, const Monomial &b) const;
};

// Sparse multivariate polynomial over Rational. Immutable value type;
// no zero coefficients are stored and the zero polynomial is the empty map.
class Poly {
public:
  using TermMap = std::map<Monomial, Rational, MonomialLess>;

  explicit Poly(VarSet vars) : vars_(vars) {}
  static Poly zero(VarSet vars) { return Poly(vars); }
  static Poly constant(VarSet vars, const Rational &c);
  static Poly variable(VarSet vars, VarIndex v);

  const VarSet &vars() const { return vars_; }
  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  unsigned total_degree() const;

  Poly operator+(const Poly &o) const;
  Poly operator-(const Poly &o) const;
  Poly operator-() const;
  Poly operator*(const Poly &o) const;
  Poly scaled(const Rational &c) const;
  Poly pow(unsigned e) const; // p^0 == 1 for every p, including p == 0
  Poly derivative(VarIndex v) const;

  // Exact substitution; every variable in the support must be assigned.
  Rational eval(const std::map<VarIndex, Rational> &point) const;

  // Relabels x-variables: exponent of x_i moves to x_perm[i-1].
  Poly permuted_x(const std::vector<VarIndex> &perm) const;

  // Deterministic rendering, highest monomial first: "x1^2*x2 + 2*x1".
  std::string to_string() const;

  bool operator==(const Poly &o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }

  // Adds c * mono; drops the term if the sum cancels.
  void add_term(const Monomial &mono, const Rational &c);

private:
  void check_same_vars(const Poly &o) const;
  VarSet vars_;
  TermMap terms_;
};

// Elementary symmetric polynomial of the given degree (1 or 2) in the
// x-variables, optionally omitting one of them (the hatted list).
Poly e_sym(VarSet vars, unsigned degree, std::optional<VarIndex> exclude = {});

// Quotient of polynomials. Equality and the zero test are decided by
// cross-multiplication; no gcd reduction is performed.
class RatFunc {
public:
  RatFunc(Poly num, Poly den);
  explicit RatFunc(Poly num);
  static RatFunc constant(VarSet vars, const Rational &c);

  const Poly &num() const { return num_; }
  const Poly &den() const { return den_; }
  const VarSet &vars() const { return num_.vars(); }

  RatFunc operator+(const RatFunc &o) const;
  RatFunc operator-(const RatFunc &o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc &o) const;
  RatFunc derivative(VarIndex v) const;

  bool is_zero() const { return num_.is_zero(); }
  bool equals(const RatFunc &o) const;

  Rational eval(const std::map<VarIndex, Rational> &point) const;
  RatFunc permuted_x(const std::vector<VarIndex> &perm) const;
  std::string to_string() const;

private:
  Poly num_, den_;
};

} // namespace wzint

#endif
