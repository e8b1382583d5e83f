#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "urn/exact.hpp"

#include <random>

using urn::Int;
using urn::Rational;

TEST_CASE("construction reduces and normalizes signs") {
  CHECK(urn::make_rational(2, 6) == urn::make_rational(1, 3));
  CHECK(urn::make_rational(-1, -3) == urn::make_rational(1, 3));
  CHECK(urn::make_rational(0, 5) == Rational(0));
  CHECK(numerator(urn::make_rational(0, 5)) == 0);
  CHECK(denominator(urn::make_rational(0, 5)) == 1);
  CHECK(denominator(urn::make_rational(3, -9)) == 3);
  CHECK(numerator(urn::make_rational(3, -9)) == -1);
  CHECK_THROWS_AS(urn::make_rational(1, 0), std::domain_error);
}

TEST_CASE("reduction idempotence under common factors") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> value(-1000000, 1000000);
  for (int i = 0; i < 200; ++i) {
    long long p = value(rng);
    long long q = value(rng);
    long long k = value(rng);
    if (q == 0 || k == 0) continue;
    CHECK(urn::make_rational(Int(p) * k, Int(q) * k) == urn::make_rational(p, q));
  }
}

TEST_CASE("field laws on random big values") {
  std::mt19937_64 rng(11);
  const auto random_rational = [&rng] {
    // Numerators and denominators well past 64 bits.
    Int num = 1;
    Int den = 1;
    std::uniform_int_distribution<std::uint64_t> word;
    for (int i = 0; i < 3; ++i) {
      num = (num << 64) | word(rng);
      den = (den << 64) | word(rng);
    }
    if (word(rng) % 2 == 0) num = -num;
    return urn::make_rational(num, den);
  };
  for (int i = 0; i < 100; ++i) {
    const Rational a = random_rational();
    const Rational b = random_rational();
    const Rational c = random_rational();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == 0);
    CHECK((a + b) + c == a + (b + c));
    if (a != 0) CHECK(a * (Rational(1) / a) == 1);
  }
}

TEST_CASE("triangular matches the direct sum") {
  CHECK(urn::triangular(0) == 0);
  CHECK(urn::triangular(4) == 10);
  CHECK(urn::triangular(100) == 5050);
  Int running = 0;
  for (int n = 1; n <= 1000; ++n) {
    running += n;
    CHECK(urn::triangular(n) == running);
  }
  CHECK_THROWS_AS(urn::triangular(-1), std::domain_error);
}

TEST_CASE("pyramidal matches the direct sum") {
  CHECK(urn::pyramidal(0) == 0);
  CHECK(urn::pyramidal(2) == 5);
  CHECK(urn::pyramidal(100) == 338350);
  Int running = 0;
  for (int n = 1; n <= 1000; ++n) {
    running += Int(n) * n;
    CHECK(urn::pyramidal(n) == running);
  }
  CHECK_THROWS_AS(urn::pyramidal(-2), std::domain_error);
}

TEST_CASE("falling factorial") {
  CHECK(urn::falling_factorial(5, 2) == 20);
  CHECK(urn::falling_factorial(7, 0) == 1);
  CHECK(urn::falling_factorial(3, 5) == 0);
  CHECK(urn::falling_factorial(0, 0) == 1);

  // Cross-check against x! / (x-k)! for k <= x <= 20.
  const auto factorial = [](int n) {
    Int out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
  };
  for (int x = 0; x <= 20; ++x) {
    for (int k = 0; k <= x; ++k) {
      CHECK(urn::falling_factorial(x, k) == factorial(x) / factorial(x - k));
    }
  }
}

TEST_CASE("binomial coefficient") {
  CHECK(urn::binomial_coefficient(4, 2) == 6);
  CHECK(urn::binomial_coefficient(10, 0) == 1);
  CHECK(urn::binomial_coefficient(3, 7) == 0);
  CHECK(urn::binomial_coefficient(100, 50) ==
        Int("100891344545564193334812497256"));
}

TEST_CASE("fraction strings round-trip") {
  CHECK(urn::to_fraction_string(urn::make_rational(2, 3)) == "2/3");
  CHECK(urn::to_fraction_string(Rational(5)) == "5");
  CHECK(urn::to_fraction_string(urn::make_rational(-4, 6)) == "-2/3");
  CHECK(urn::parse_rational("2/3") == urn::make_rational(2, 3));
  CHECK(urn::parse_rational("7") == Rational(7));
  CHECK(urn::parse_rational("-10/4") == urn::make_rational(-5, 2));
  CHECK_THROWS_AS(urn::parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(urn::parse_rational("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(urn::parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(urn::parse_rational("1.5"), std::invalid_argument);

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long long> value(-1000000000, 1000000000);
  for (int i = 0; i < 200; ++i) {
    long long q = value(rng);
    if (q == 0) continue;
    const Rational r = urn::make_rational(value(rng), q);
    CHECK(urn::parse_rational(urn::to_fraction_string(r)) == r);
  }
}

TEST_CASE("decimal rendering rounds half to even") {
  CHECK(urn::to_decimal_string(urn::make_rational(2, 3)) == "0.666666666667");
  CHECK(urn::to_decimal_string(urn::make_rational(1, 2)) == "0.5");
  CHECK(urn::to_decimal_string(Rational(0)) == "0");
  CHECK(urn::to_decimal_string(Rational(1)) == "1");
  CHECK(urn::to_decimal_string(urn::make_rational(1, 101)) == "0.00990099009901");
  CHECK(urn::to_decimal_string(urn::make_rational(-2, 3)) == "-0.666666666667");

  // Ties: 0.0125 at two significant digits is 0.012, 0.0135 is 0.014.
  CHECK(urn::to_decimal_string(urn::make_rational(125, 10000), 2) == "0.012");
  CHECK(urn::to_decimal_string(urn::make_rational(135, 10000), 2) == "0.014");
  // Carry across the leading digit.
  CHECK(urn::to_decimal_string(urn::make_rational(999999, 1000000), 3) == "1");
  CHECK(urn::to_decimal_string(urn::make_rational(9996, 10), 3) == "1000");
}
