// Continued-fraction counterpart: expansion round-trips, convergent
// denominators against the reduced-value oracle, cylinder geometry, and the
// stationary ratio band contrasted with the vanishing O1 child ratio.
#include <numeric>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "ostro/continued_fraction.hpp"
#include "ostro/cylinder.hpp"
#include "ostro/rational.hpp"
#include "test_util.hpp"

using namespace ostro;

TEST_CASE("cf expansion of small rationals") {
  CHECK(cfExpand(Rational(2, 3)).quotients() == std::vector<mpz_class>{1, 2});
  CHECK(cfExpand(Rational(1, 2)).quotients() == std::vector<mpz_class>{2});
  CHECK(cfExpand(Rational(5, 7)).quotients() == std::vector<mpz_class>{1, 2, 2});
  // 2/3 = 1/(1 + 1/2) by hand.
  CHECK(Rational(1) / (Rational(1) + Rational(1, 2)) == Rational(2, 3));

  CHECK_THROWS_AS(cfExpand(Rational(0)), std::domain_error);
  CHECK_THROWS_AS(cfExpand(Rational(1)), std::domain_error);
  CHECK_THROWS_AS(cfExpand(Rational(3, 2)), std::domain_error);
  CHECK_THROWS_AS(cfExpand(Rational(-1, 4)), std::domain_error);
}

TEST_CASE("cf round-trip with canonical last quotient") {
  for (long q = 2; q <= 60; ++q)
    for (long p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Rational x(p, q);
      const CFExpansion e = cfExpand(x);
      CHECK(cfEvaluate(e) == x);
      for (const mpz_class& a : e.quotients()) CHECK(a >= 1);
      if (e.size() >= 2) CHECK(e.quotients().back() >= 2);
    }
}

TEST_CASE("convergent denominators match the reduced partial values") {
  for (long q = 2; q <= 40; ++q)
    for (long p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const CFExpansion e = cfExpand(Rational(p, q));
      const auto dens = e.convergentDenominators();
      REQUIRE(dens.size() == e.size());
      // P_k and Q_k are coprime, so the reduced value of the depth-k prefix
      // exposes Q_k directly.
      for (std::size_t k = 1; k <= e.size(); ++k) {
        const CFExpansion prefix(std::vector<mpz_class>(
            e.quotients().begin(), e.quotients().begin() + static_cast<long>(k)));
        CHECK(cfEvaluate(prefix).den() == dens[k - 1]);
      }
      for (std::size_t k = 1; k < dens.size(); ++k) CHECK(dens[k - 1] < dens[k]);
      CHECK(dens.back() == q);
    }
}

TEST_CASE("cf cylinders: pinned endpoints and the length formula") {
  CHECK(cfCylinderEndpoints(CFExpansion({})) ==
        std::pair(Rational(0), Rational(1)));
  CHECK(cfCylinderLength(CFExpansion({})) == Rational(1));

  // a_1 = 1 covers (1/2, 1); a_1 = 2 covers (1/3, 1/2].
  CHECK(cfCylinderEndpoints(CFExpansion({mpz_class(1)})) ==
        std::pair(Rational(1, 2), Rational(1)));
  CHECK(cfCylinderEndpoints(CFExpansion({mpz_class(2)})) ==
        std::pair(Rational(1, 3), Rational(1, 2)));
  CHECK(cfCylinderEndpoints(CFExpansion({mpz_class(1), mpz_class(2)})) ==
        std::pair(Rational(2, 3), Rational(3, 4)));

  // length = 1/(Q_m (Q_m + Q_{m-1})) for every base of depth <= 3.
  for (long a = 1; a <= 4; ++a)
    for (long b = 1; b <= 4; ++b)
      for (long c = 1; c <= 4; ++c) {
        const CFExpansion base({mpz_class(a), mpz_class(b), mpz_class(c)});
        const auto dens = base.convergentDenominators();
        CHECK(cfCylinderLength(base) ==
              Rational(1, dens[2] * (dens[2] + dens[1])));
        const auto [lo, hi] = cfCylinderEndpoints(base);
        CHECK(lo < hi);
        CHECK(Rational(0) < lo);
        CHECK(hi <= Rational(1));
      }
}

TEST_CASE("cf cylinders of a value's prefixes nest around the value") {
  std::mt19937_64 gen(31);
  for (int i = 0; i < 120; ++i) {
    const Rational x = testutil::randomUnitRational(gen, 5000);
    const CFExpansion e = cfExpand(x);
    Rational prevLen(2);
    for (std::size_t k = 1; k <= e.size(); ++k) {
      const CFExpansion prefix(std::vector<mpz_class>(
          e.quotients().begin(), e.quotients().begin() + static_cast<long>(k)));
      const auto [lo, hi] = cfCylinderEndpoints(prefix);
      CHECK(lo <= x);
      CHECK(x <= hi);
      const Rational len = cfCylinderLength(prefix);
      CHECK(len == hi - lo);
      CHECK(len < prevLen);
      prevLen = len;
    }
  }
}

TEST_CASE("cf ratio formula equals the endpoint-difference oracle") {
  for (long a = 1; a <= 4; ++a)
    for (long b = 1; b <= 4; ++b)
      for (long c = 1; c <= 4; ++c)
        for (long s = 1; s <= 4; ++s) {
          const std::vector<mpz_class> q{mpz_class(a), mpz_class(b), mpz_class(c)};
          auto child = q;
          child.push_back(mpz_class(s));
          CHECK(cfCylinderRatio(CFExpansion(q), mpz_class(s)) ==
                cfCylinderLength(CFExpansion(child)) / cfCylinderLength(CFExpansion(q)));
        }
}

TEST_CASE("cf ratio band: strict except the single corner base [1], s = 1") {
  // The corner attains the lower endpoint exactly: r = Q_0/Q_1 = 1 there.
  CHECK(cfCylinderRatio(CFExpansion({mpz_class(1)}), mpz_class(1)) == Rational(1, 3));
  CHECK(cfRatioBand(mpz_class(1)) == std::pair(Rational(1, 3), Rational(2)));

  // Spec'd sanity points.
  {
    const Rational r = cfCylinderRatio(CFExpansion({mpz_class(2), mpz_class(2)}), mpz_class(3));
    const auto [lo, hi] = cfRatioBand(mpz_class(3));
    CHECK(lo == Rational(1, 27));
    CHECK(hi == Rational(2, 9));
    CHECK(lo < r);
    CHECK(r < hi);
  }

  // Every base coming from an actual expansion keeps the inequality strict.
  std::mt19937_64 gen(77);
  for (int i = 0; i < 500; ++i) {
    const CFExpansion base = cfExpand(testutil::randomUnitRational(gen, 4000));
    const mpz_class s(1 + static_cast<long>(gen() % 30));
    const Rational ratio = cfCylinderRatio(base, s);
    const auto [lo, hi] = cfRatioBand(s);
    CHECK(lo < ratio);
    CHECK(ratio < hi);
  }
}

TEST_CASE("ratio decay contrast: O1 column vanishes, CF band stays put") {
  const std::vector<mpz_class> sigmas{mpz_class(1), mpz_class(10), mpz_class(100),
                                      mpz_class(1000)};
  const auto rows = ratioDecayContrast(sigmas, mpz_class(2));
  REQUIRE(rows.size() == 4);
  for (const auto& row : rows) {
    CHECK(row.cfLow == Rational(1, 12));
    CHECK(row.cfHigh == Rational(1, 2));
    CHECK(row.o1Ratio == childRatioAt(row.sigma, mpz_class(2)));
  }
  // sigma = s - 1 = 1 attains the O1 maximum 1/(2(2s-1)).
  CHECK(rows[0].o1Ratio == Rational(1, 6));
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].o1Ratio < rows[i - 1].o1Ratio);
  CHECK(rows.back().o1Ratio < Rational(1, 1000));
  CHECK(rows.back().o1Ratio < rows.back().cfLow);
}

TEST_CASE("cf input validation") {
  CHECK_THROWS_AS(CFExpansion({mpz_class(0)}), std::domain_error);
  CHECK_THROWS_AS(CFExpansion({mpz_class(2), mpz_class(-1)}), std::domain_error);
  CHECK_THROWS_AS(cfEvaluate(CFExpansion({})), std::domain_error);
  CHECK_THROWS_AS(cfCylinderRatio(CFExpansion({}), mpz_class(2)), std::domain_error);
  CHECK_THROWS_AS(cfCylinderRatio(CFExpansion({mpz_class(2)}), mpz_class(0)),
                  std::domain_error);
  CHECK_THROWS_AS(cfRatioBand(mpz_class(0)), std::domain_error);
  CHECK_THROWS_AS(ratioDecayContrast({}, mpz_class(2)), std::domain_error);
}
