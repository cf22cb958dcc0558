#include "wzint/rational.hpp"

namespace wzint {

Rational Rational::from_string(const std::string &s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  if (q.get_den() == 0)
    throw std::domain_error("Rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return Rational(q);
}

std::string Rational::to_string() const {
  if (q_.get_den() == 1)
    return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::pow(long e) const {
  if (e < 0) {
    if (is_zero())
      throw std::domain_error("Rational: 0 to a negative power");
    return Rational(1) / pow(-e);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(mpq_class(num, den));
}

Rational factorial(unsigned long a) {
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), a);
  return Rational(z);
}

Rational rising_factorial(const Rational &y, unsigned long m) {
  Rational acc(1);
  Rational term = y;
  for (unsigned long i = 0; i < m; ++i) {
    acc *= term;
    term += Rational(1);
  }
  return acc;
}

mpz_class binomial(unsigned long n, unsigned long r) {
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), n, r);
  return z;
}

} // namespace wzint
