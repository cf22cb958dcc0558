#include "wzint/rational.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace wzint;

TEST_CASE("basic arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(3, 4) * Rational(4, 3) == Rational(1));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(7) / Rational(2) == Rational(7, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("canonical form") {
  CHECK(Rational(2, 4).numerator() == 1);
  CHECK(Rational(2, 4).denominator() == 2);
  CHECK(Rational(3, -6).numerator() == -1);
  CHECK(Rational(3, -6).denominator() == 2);
  CHECK(Rational(0, 7).denominator() == 1);

  std::mt19937 rng(12345);
  for (int i = 0; i < 200; ++i) {
    const Rational a = testing::random_rational(rng);
    const Rational b = testing::random_nonzero_rational(rng);
    for (const Rational &r : {a + b, a - b, a * b, a / b}) {
      CHECK(r.denominator() > 0);
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(),
              r.denominator().get_mpz_t());
      CHECK(g == 1);
    }
  }
}

TEST_CASE("rendering") {
  CHECK(Rational(5, 6).to_string() == "5/6");
  CHECK(Rational(-1, 2).to_string() == "-1/2");
  CHECK(Rational(3).to_string() == "3");
  CHECK(Rational(0).to_string() == "0");
  CHECK(Rational::from_string("-7/21") == Rational(-1, 3));
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == Rational(1));
  CHECK(factorial(5) == Rational(120));
  CHECK(factorial(20).to_string() == "2432902008176640000");
  CHECK(factorial(21).to_string() == "51090942171709440000"); // past 2^63
}

TEST_CASE("rising factorial") {
  CHECK(rising_factorial(Rational(3, 2), 2) == Rational(15, 4));
  CHECK(rising_factorial(Rational(1), 6) == Rational(720));
  CHECK(rising_factorial(Rational(-2), 4) == Rational(0));
  CHECK(rising_factorial(Rational(7, 3), 0) == Rational(1));

  std::mt19937 rng(777);
  for (int i = 0; i < 100; ++i) {
    const Rational y = testing::random_rational(rng, 8);
    std::uniform_int_distribution<unsigned long> md(0, 10);
    const unsigned long m = md(rng);
    CHECK(rising_factorial(y, m + 1) ==
          rising_factorial(y, m) * (y + Rational(static_cast<long>(m))));
  }
  for (unsigned long a = 0; a <= 12; ++a)
    CHECK(factorial(a) == rising_factorial(Rational(1), a));
}

TEST_CASE("integer powers") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(0) == Rational(1));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}
