#ifndef WZINT_WZ_HPP
#define WZINT_WZ_HPP

#include "wzint/poly.hpp"

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace wzint {

enum class CertKind { WZ1, WZ2 };

std::string to_string(CertKind kind);

// A telescoping certificate for concrete k with symbolic m, n: one
// rational function R(x_i; hatted x_i) per integration variable, over the
// full variable set {x_1..x_k, m, n}.
struct Certificate {
  unsigned k = 0;
  CertKind kind = CertKind::WZ1;
  std::vector<RatFunc> r; // r[i-1] is R for variable x_i

  const RatFunc &r_of(unsigned i) const;
};

// R(u; v) = u / (2m + n + k).
Certificate certificate_wz1(unsigned k);

// R(u; v) = (((k-1)(m+1) + e1(v)) u + e2(v)) / ((k-1)(m+1)(2m+k)).
Certificate certificate_wz2(unsigned k);

// F-normalized divergence defect:
//   shift_ratio - 1 + sum_i [ D_{x_i} R_i + R_i * D_{x_i} log F ]
// with the shift ratio and log-derivatives of the integrand encoded as
// fixed rational functions. Identically zero iff the certificate is valid.
RatFunc wz_residual(const Certificate &cert);

struct VerifyReport {
  unsigned k = 0;
  CertKind kind = CertKind::WZ1;
  bool is_valid = false;
  std::string residual_rendering;
  std::uint64_t residual_terms = 0; // numerator support size before the zero test
  std::chrono::microseconds wall{0};
};

VerifyReport verify(const Certificate &cert);

} // namespace wzint

#endif
