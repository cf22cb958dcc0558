#include "wzint/poly.hpp"

#include <algorithm>
#include <sstream>

namespace wzint {

std::string VarSet::name(VarIndex v) const {
  if (!contains(v))
    throw std::invalid_argument("VarSet: variable index out of scope");
  if (v <= k)
    return "x" + std::to_string(v);
  return v == k + 1 ? "m" : "n";
}

bool MonomialLess::operator()(const Monomial &a, const Monomial &b) const {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db)
    return da < db;
  auto ia = a.exps.begin(), ib = b.exps.begin();
  while (ia != a.exps.end() && ib != b.exps.end()) {
    if (ia->first != ib->first) {
      // The monomial holding the earlier variable has the larger exponent
      // there (the other has zero).
      return ia->first > ib->first;
    }
    if (ia->second != ib->second)
      return ia->second < ib->second;
    ++ia, ++ib;
  }
  return ia == a.exps.end() && ib != b.exps.end();
}

Poly Poly::constant(VarSet vars, const Rational &c) {
  Poly p(vars);
  p.add_term(Monomial{}, c);
  return p;
}

Poly Poly::variable(VarSet vars, VarIndex v) {
  if (!vars.contains(v))
    throw std::invalid_argument("Poly: variable index out of scope");
  Poly p(vars);
  p.add_term(Monomial{{{v, 1}}}, Rational(1));
  return p;
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (auto &[mono, c] : terms_)
    d = std::max(d, mono.degree());
  return d;
}

void Poly::add_term(const Monomial &mono, const Rational &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

void Poly::check_same_vars(const Poly &o) const {
  if (!(vars_ == o.vars_))
    throw std::invalid_argument("Poly: operands have different variable sets");
}

Poly Poly::operator+(const Poly &o) const {
  check_same_vars(o);
  Poly r = *this;
  for (auto &[mono, c] : o.terms_)
    r.add_term(mono, c);
  return r;
}

Poly Poly::operator-() const {
  Poly r(vars_);
  for (auto &[mono, c] : terms_)
    r.terms_.emplace(mono, -c);
  return r;
}

Poly Poly::operator-(const Poly &o) const { return *this + (-o); }

namespace {
Monomial mono_mul(const Monomial &a, const Monomial &b) {
  Monomial r;
  r.exps.reserve(a.exps.size() + b.exps.size());
  auto ia = a.exps.begin(), ib = b.exps.begin();
  while (ia != a.exps.end() || ib != b.exps.end()) {
    if (ib == b.exps.end() || (ia != a.exps.end() && ia->first < ib->first))
      r.exps.push_back(*ia++);
    else if (ia == a.exps.end() || ib->first < ia->first)
      r.exps.push_back(*ib++);
    else {
      r.exps.emplace_back(ia->first, ia->second + ib->second);
      ++ia, ++ib;
    }
  }
  return r;
}
} // namespace

Poly Poly::operator*(const Poly &o) const {
  check_same_vars(o);
  Poly r(vars_);
  for (auto &[ma, ca] : terms_)
    for (auto &[mb, cb] : o.terms_)
      r.add_term(mono_mul(ma, mb), ca * cb);
  return r;
}

Poly Poly::scaled(const Rational &c) const {
  Poly r(vars_);
  if (c.is_zero())
    return r;
  for (auto &[mono, coeff] : terms_)
    r.terms_.emplace(mono, coeff * c);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r = constant(vars_, Rational(1));
  for (unsigned i = 0; i < e; ++i)
    r = r * *this;
  return r;
}

Poly Poly::derivative(VarIndex v) const {
  if (!vars_.contains(v))
    throw std::invalid_argument("Poly: derivative variable out of scope");
  Poly r(vars_);
  for (auto &[mono, c] : terms_) {
    const unsigned e = mono.exponent(v);
    if (e == 0)
      continue;
    Monomial d;
    for (auto &[var, exp] : mono.exps) {
      if (var == v) {
        if (exp > 1)
          d.exps.emplace_back(var, exp - 1);
      } else {
        d.exps.emplace_back(var, exp);
      }
    }
    r.add_term(d, c * Rational(static_cast<long>(e)));
  }
  return r;
}

Rational Poly::eval(const std::map<VarIndex, Rational> &point) const {
  Rational total(0);
  for (auto &[mono, c] : terms_) {
    Rational t = c;
    for (auto &[v, e] : mono.exps) {
      auto it = point.find(v);
      if (it == point.end())
        throw std::invalid_argument("Poly: eval point misses variable " +
                                    vars_.name(v));
      t *= it->second.pow(static_cast<long>(e));
    }
    total += t;
  }
  return total;
}

Poly Poly::permuted_x(const std::vector<VarIndex> &perm) const {
  if (perm.size() != vars_.k)
    throw std::invalid_argument("Poly: permutation size must equal k");
  Poly r(vars_);
  for (auto &[mono, c] : terms_) {
    Monomial p;
    for (auto &[v, e] : mono.exps)
      p.exps.emplace_back(v <= vars_.k ? perm[v - 1] : v, e);
    std::sort(p.exps.begin(), p.exps.end());
    r.add_term(p, c);
  }
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream out;
  bool first = true;
  // Highest monomial first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto &[mono, c] = *it;
    const bool negative = c < Rational(0);
    const Rational mag = negative ? -c : c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    const bool unit = mag.is_one() && !mono.exps.empty();
    if (!unit)
      out << mag.to_string();
    bool need_star = !unit;
    for (auto &[v, e] : mono.exps) {
      if (need_star)
        out << "*";
      out << vars_.name(v);
      if (e > 1)
        out << "^" << e;
      need_star = true;
    }
  }
  return out.str();
}

Poly e_sym(VarSet vars, unsigned degree, std::optional<VarIndex> exclude) {
  if (degree != 1 && degree != 2)
    throw std::invalid_argument("e_sym: degree must be 1 or 2");
  if (exclude && (*exclude < 1 || *exclude > vars.k))
    throw std::invalid_argument("e_sym: excluded index out of range 1..k");
  std::vector<VarIndex> xs;
  for (VarIndex v = 1; v <= vars.k; ++v)
    if (!exclude || v != *exclude)
      xs.push_back(v);
  Poly p(vars);
  if (degree == 1) {
    for (VarIndex v : xs)
      p.add_term(Monomial{{{v, 1}}}, Rational(1));
  } else {
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j)
        p.add_term(Monomial{{{xs[i], 1}, {xs[j], 1}}}, Rational(1));
  }
  return p;
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (!(num_.vars() == den_.vars()))
    throw std::invalid_argument("RatFunc: numerator and denominator variable sets differ");
  if (den_.is_zero())
    throw std::domain_error("RatFunc: zero denominator");
}

RatFunc::RatFunc(Poly num)
    : RatFunc(num, Poly::constant(num.vars(), Rational(1))) {}

RatFunc RatFunc::constant(VarSet vars, const Rational &c) {
  return RatFunc(Poly::constant(vars, c));
}

RatFunc RatFunc::operator+(const RatFunc &o) const {
  if (den_ == o.den_)
    return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::operator-(const RatFunc &o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc &o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::derivative(VarIndex v) const {
  return RatFunc(num_.derivative(v) * den_ - num_ * den_.derivative(v),
                 den_ * den_);
}

bool RatFunc::equals(const RatFunc &o) const {
  return (num_ * o.den_ - o.num_ * den_).is_zero();
}

Rational RatFunc::eval(const std::map<VarIndex, Rational> &point) const {
  const Rational d = den_.eval(point);
  if (d.is_zero())
    throw std::domain_error("RatFunc: denominator vanishes at the point");
  return num_.eval(point) / d;
}

RatFunc RatFunc::permuted_x(const std::vector<VarIndex> &perm) const {
  return RatFunc(num_.permuted_x(perm), den_.permuted_x(perm));
}

std::string RatFunc::to_string() const {
  if (num_.is_zero())
    return "0";
  if (den_ == Poly::constant(den_.vars(), Rational(1)))
    return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

} // namespace wzint
