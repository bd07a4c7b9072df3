#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "ostro/enclosure.hpp"
#include "ostro/rational.hpp"

#include "test_util.hpp"

using ostro::Enclosure;
using ostro::Rational;

TEST_CASE("rational construction reduces and normalizes sign") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational());
  CHECK(Rational(6, 3).isInteger());
  CHECK(Rational(6, 3).num() == 2);
  CHECK(Rational(6, 3).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic matches cross-multiplication on random pairs") {
  std::mt19937_64 gen(12345);
  std::uniform_int_distribution<long> d(-50, 50), e(1, 50);
  for (int i = 0; i < 500; ++i) {
    const long a = d(gen), b = e(gen), c = d(gen), f = e(gen);
    const Rational x(a, b), y(c, f);
    CHECK(x + y == Rational(a * f + c * b, b * f));
    CHECK(x - y == Rational(a * f - c * b, b * f));
    CHECK(x * y == Rational(a * c, b * f));
    if (c != 0) CHECK(x / y == Rational(a * f, b * c));
  }
  CHECK_THROWS_AS(Rational(1, 2) / Rational(), std::domain_error);
  CHECK_THROWS_AS(Rational().reciprocal(), std::domain_error);
}

TEST_CASE("rational ordering is total and consistent with subtraction") {
  std::mt19937_64 gen(99);
  for (int i = 0; i < 200; ++i) {
    const Rational x = testutil::randomUnitRational(gen, 300);
    const Rational y = testutil::randomUnitRational(gen, 300);
    CHECK((x < y) == (x - y).isNegative());
    CHECK((x == y) == (x - y).isZero());
  }
}

TEST_CASE("rational text round-trips losslessly") {
  const std::vector<Rational> cases = {Rational(), Rational(1), Rational(-7),
                                       Rational(5, 7), Rational(-22, 9),
                                       Rational(mpz_class("123456789123456789"),
                                                mpz_class("987654321987654322"))};
  for (const Rational& r : cases) CHECK(Rational::parse(r.str()) == r);
  CHECK(Rational(5, 7).str() == "5/7");
  CHECK(Rational(4).str() == "4");
  CHECK(Rational(-1, 3).str() == "-1/3");
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("banana"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("decimal rendering rounds half away from zero at the last digit") {
  CHECK(Rational(1, 3).decimal(6) == "0.333333");
  CHECK(Rational(2, 3).decimal(6) == "0.666667");
  CHECK(Rational(1, 2).decimal(3) == "0.500");
  CHECK(Rational(5).decimal(2) == "5.00");
  CHECK(Rational(-1, 8).decimal(2) == "-0.13");
}

TEST_CASE("enclosure arithmetic is outward-directed") {
  std::mt19937_64 gen(7);
  for (int i = 0; i < 200; ++i) {
    const Rational a = testutil::randomUnitRational(gen, 60);
    const Rational b = testutil::randomUnitRational(gen, 60);
    const Rational c = testutil::randomUnitRational(gen, 60);
    const Rational d = testutil::randomUnitRational(gen, 60);
    const Enclosure x(std::min(a, b), std::max(a, b));
    const Enclosure y(std::min(c, d), std::max(c, d));
    // Every pointwise combination of contained values stays inside.
    for (const Rational& p : {x.lo(), x.hi()})
      for (const Rational& q : {y.lo(), y.hi()}) {
        CHECK((x + y).contains(p + q));
        CHECK((x - y).contains(p - q));
        CHECK((x * y).contains(p * q));
      }
  }
  CHECK_THROWS_AS(Enclosure(Rational(1), Rational(0)), std::domain_error);
}

TEST_CASE("enclosure hull, intersect, sum, and scale") {
  const Enclosure a(Rational(1, 4), Rational(1, 2));
  const Enclosure b(Rational(1, 3), Rational(3, 4));
  CHECK(Enclosure::hull(a, b) == Enclosure(Rational(1, 4), Rational(3, 4)));
  CHECK(Enclosure::intersect(a, b) == Enclosure(Rational(1, 3), Rational(1, 2)));
  CHECK_THROWS_AS(Enclosure::intersect(Enclosure(Rational(0), Rational(1, 8)),
                                       Enclosure(Rational(1, 4), Rational(1, 2))),
                  std::domain_error);
  const std::vector<Enclosure> parts = {a, b, Enclosure(Rational(1))};
  CHECK(Enclosure::sum(parts) ==
        Enclosure(Rational(1, 4) + Rational(1, 3) + Rational(1),
                  Rational(1, 2) + Rational(3, 4) + Rational(1)));
  CHECK(a.scale(Rational(-2)) == Enclosure(Rational(-1), Rational(-1, 2)));
  CHECK(a.scale(Rational(2)) == Enclosure(Rational(1, 2), Rational(1)));
}
