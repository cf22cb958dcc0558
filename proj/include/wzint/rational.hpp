#ifndef WZINT_RATIONAL_HPP
#define WZINT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wzint {

// Exact rational scalar. Always canonical: positive denominator,
// gcd(|num|, den) == 1, zero stored as 0/1.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}
  Rational(long num, long den) {
    if (den == 0)
      throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rational(const mpq_class &q) : q_(q) { q_.canonicalize(); }
  explicit Rational(const mpz_class &z) : q_(z) {}

  static Rational from_string(const std::string &s);

  Rational operator-() const { return Rational(mpq_class(-q_), already_canonical{}); }
  Rational operator+(const Rational &o) const { return Rational(q_ + o.q_, already_canonical{}); }
  Rational operator-(const Rational &o) const { return Rational(q_ - o.q_, already_canonical{}); }
  Rational operator*(const Rational &o) const { return Rational(q_ * o.q_, already_canonical{}); }
  Rational operator/(const Rational &o) const {
    if (o.is_zero())
      throw std::domain_error("Rational: division by zero");
    return Rational(q_ / o.q_, already_canonical{});
  }
  Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
  Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
  Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
  Rational &operator/=(const Rational &o) { return *this = *this / o; }

  bool operator==(const Rational &o) const { return q_ == o.q_; }
  bool operator!=(const Rational &o) const { return q_ != o.q_; }
  bool operator<(const Rational &o) const { return q_ < o.q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  // "p/q" with q > 1, plain "p" otherwise; sign on the numerator.
  std::string to_string() const;

  // base^e; e < 0 requires a nonzero base.
  Rational pow(long e) const;

private:
  struct already_canonical {};
  Rational(const mpq_class &q, already_canonical) : q_(q) {}
  mpq_class q_;
};

// a! as an integer-valued Rational, arbitrary precision.
Rational factorial(unsigned long a);

// Rising factorial (y)_m = y (y+1) ... (y+m-1); (y)_0 = 1.
Rational rising_factorial(const Rational &y, unsigned long m);

// Binomial coefficient C(n, r) as an exact integer count.
mpz_class binomial(unsigned long n, unsigned long r);

} // namespace wzint

#endif
