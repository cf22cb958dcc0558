#include "wzint/wz.hpp"

#include <optional>
#include <stdexcept>

namespace wzint {

std::string to_string(CertKind kind) {
  return kind == CertKind::WZ1 ? "wz1" : "wz2";
}

const RatFunc &Certificate::r_of(unsigned i) const {
  if (i < 1 || i > k)
    throw std::invalid_argument("Certificate: index out of range 1..k");
  return r[i - 1];
}

namespace {

// 2m + n + k, the denominator of the first certificate.
Poly wz1_scalar_den(const VarSet &vars) {
  Poly d(vars);
  d.add_term(Monomial{{{vars.m_var(), 1}}}, Rational(2));
  d.add_term(Monomial{{{vars.n_var(), 1}}}, Rational(1));
  d.add_term(Monomial{}, Rational(static_cast<long>(vars.k)));
  return d;
}

// (k-1)(m+1)(2m+k), the denominator of the second certificate.
Poly wz2_scalar_den(const VarSet &vars) {
  const long k = static_cast<long>(vars.k);
  Poly m_plus_1(vars);
  m_plus_1.add_term(Monomial{{{vars.m_var(), 1}}}, Rational(1));
  m_plus_1.add_term(Monomial{}, Rational(1));
  Poly two_m_plus_k(vars);
  two_m_plus_k.add_term(Monomial{{{vars.m_var(), 1}}}, Rational(2));
  two_m_plus_k.add_term(Monomial{}, Rational(k));
  return m_plus_1.scaled(Rational(k - 1)) * two_m_plus_k;
}

void require_k(unsigned k) {
  if (k < 2)
    throw std::domain_error("certificate: k must be >= 2");
}

} // namespace

Certificate certificate_wz1(unsigned k) {
  require_k(k);
  const VarSet vars(k, true);
  const Poly den = wz1_scalar_den(vars);
  Certificate cert{k, CertKind::WZ1, {}};
  for (unsigned i = 1; i <= k; ++i)
    cert.r.emplace_back(Poly::variable(vars, i), den);
  return cert;
}

Certificate certificate_wz2(unsigned k) {
  require_k(k);
  const VarSet vars(k, true);
  const long kl = static_cast<long>(k);
  const Poly den = wz2_scalar_den(vars);
  Certificate cert{k, CertKind::WZ2, {}};
  for (unsigned i = 1; i <= k; ++i) {
    Poly lead(vars); // (k-1)(m+1) + e1(hatted x_i)
    lead.add_term(Monomial{{{vars.m_var(), 1}}}, Rational(kl - 1));
    lead.add_term(Monomial{}, Rational(kl - 1));
    lead = lead + e_sym(vars, 1, i);
    const Poly num = lead * Poly::variable(vars, i) + e_sym(vars, 2, i);
    cert.r.emplace_back(num, den);
  }
  return cert;
}

RatFunc wz_residual(const Certificate &cert) {
  const unsigned k = cert.k;
  const VarSet vars(k, true);
  const Poly e1 = e_sym(vars, 1);
  const Poly e2 = e_sym(vars, 2);
  const Poly m_poly = Poly::variable(vars, vars.m_var());
  const Poly n_poly = Poly::variable(vars, vars.n_var());

  // Shift quotient F(shifted)/F, fixed per certificate kind.
  const RatFunc shift_ratio =
      cert.kind == CertKind::WZ1
          ? RatFunc(e1, wz1_scalar_den(vars))
          : RatFunc(e2.scaled(Rational(static_cast<long>(k))),
                    wz2_scalar_den(vars));

  // Summands are grouped by structurally equal denominators so the adds
  // inside each group do not inflate the common denominator.
  std::optional<RatFunc> div_sum, log_sum;
  for (unsigned i = 1; i <= k; ++i) {
    const RatFunc &r = cert.r_of(i);
    // D_{x_i} log F = n/e1 + m e1(hatted x_i)/e2 - 1, with the n/e1 term
    // absent for the m-direction certificate (its F has n = 0).
    Poly logder_num = m_poly * e_sym(vars, 1, i) * e1 - e1 * e2;
    if (cert.kind == CertKind::WZ1)
      logder_num = logder_num + n_poly * e2;
    const RatFunc logder(logder_num, e1 * e2);
    const RatFunc dr = r.derivative(i);
    const RatFunc rl = r * logder;
    div_sum = div_sum ? *div_sum + dr : dr;
    log_sum = log_sum ? *log_sum + rl : rl;
  }
  RatFunc acc = shift_ratio - RatFunc::constant(vars, Rational(1));
  acc = acc + *div_sum;
  acc = acc + *log_sum;
  return acc;
}

VerifyReport verify(const Certificate &cert) {
  const auto start = std::chrono::steady_clock::now();
  const RatFunc residual = wz_residual(cert);
  VerifyReport report;
  report.k = cert.k;
  report.kind = cert.kind;
  report.is_valid = residual.is_zero();
  report.residual_rendering = residual.to_string();
  report.residual_terms = residual.num().term_count();
  report.wall = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

} // namespace wzint
