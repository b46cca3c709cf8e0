// Exact dyadic arithmetic, checked against a plain fraction oracle.

#include <stdexcept>
#include <numeric>
#include <random>

#include "airframe/dyadic.hpp"
#include "doctest.h"

using airframe::DyadicRational;

namespace {
  // Reference fraction with a power-of-two denominator kept unreduced.
  struct Fraction {
    long long num;
    long long den;
    bool equals(DyadicRational const& d) const {
      // num/den == n/2^e  <=>  num * 2^e == n * den
      return static_cast<__int128>(num) * (static_cast<__int128>(1) << d.exponent())
             == static_cast<__int128>(d.numerator()) * den;
    }
  };
}  // namespace

TEST_CASE("normal form") {
  CHECK(DyadicRational(2, 2) == DyadicRational(1, 1));
  CHECK(DyadicRational(0, 5).exponent() == 0);
  CHECK(DyadicRational(3, -2) == DyadicRational(12));
  CHECK(DyadicRational(6, 3).str() == "3/4");
  CHECK(DyadicRational(-6, 3).str() == "-3/4");
  CHECK(DyadicRational(3, 2).power_str() == "3/2^2");
}

TEST_CASE("parsing accepts three spellings") {
  CHECK(DyadicRational::parse("3/4") == DyadicRational(3, 2));
  CHECK(DyadicRational::parse("3/2^2") == DyadicRational(3, 2));
  CHECK(DyadicRational::parse("-5") == DyadicRational(-5));
  CHECK(DyadicRational::parse("6/8") == DyadicRational(3, 2));
  CHECK_THROWS(DyadicRational::parse("1/3"));
  CHECK_THROWS(DyadicRational::parse(""));
  CHECK_THROWS(DyadicRational::parse("1/"));
  CHECK_THROWS(DyadicRational::parse("x"));
}

TEST_CASE("arithmetic agrees with fractions") {
  std::mt19937_64                    rng(7);
  std::uniform_int_distribution<int> num(-200, 200);
  std::uniform_int_distribution<int> ex(0, 12);
  for (int i = 0; i < 2000; ++i) {
    int            a = num(rng), ea = ex(rng), b = num(rng), eb = ex(rng);
    DyadicRational x(a, ea), y(b, eb);
    long long      da = 1LL << ea, db = 1LL << eb;
    CHECK(Fraction{a * db + b * da, da * db}.equals(x + y));
    CHECK(Fraction{a * db - b * da, da * db}.equals(x - y));
    CHECK(Fraction{1LL * a * b, da * db}.equals(x * y));
    CHECK(Fraction{a, 2 * da}.equals(x.half()));
    CHECK(((x < y) == (a * db < b * da)));
    CHECK(Fraction{a * db + b * da, 2 * da * db}.equals(airframe::midpoint(x, y)));
  }
}

TEST_CASE("mod 1 and exact division") {
  CHECK(DyadicRational(-1, 2).mod1() == DyadicRational(3, 2));
  CHECK(DyadicRational(5, 1).mod1() == DyadicRational(1, 1));
  CHECK(DyadicRational(1).mod1() == DyadicRational(0));
  CHECK(airframe::exact_div(DyadicRational(3, 2), DyadicRational(3, 1)) == DyadicRational(1, 1));
  CHECK_THROWS_AS(airframe::exact_div(DyadicRational(1), DyadicRational(3)), std::domain_error);
  CHECK_THROWS_AS(airframe::exact_div(DyadicRational(1), DyadicRational(0)), std::domain_error);
}
