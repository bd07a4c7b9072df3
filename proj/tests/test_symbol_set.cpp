#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "ostro/cylinder.hpp"
#include "ostro/symbol_set.hpp"

#include "test_util.hpp"

using namespace ostro;

namespace {

std::vector<SymbolSet> sampleSets() {
  return {SymbolSet::all(),
          SymbolSet::finiteSet({2, 5, 9}),
          SymbolSet::finiteSet({1}),
          SymbolSet::upTo(4),
          SymbolSet::tailFrom(0),
          SymbolSet::tailFrom(3),
          SymbolSet::progression(1, 2),
          SymbolSet::progression(3, 5),
          SymbolSet::complementList({2, 6}),
          SymbolSet::complementArithmetic(2, 2),
          SymbolSet::complementArithmetic(3, 3)};
}

/// Walks contains() upward: the k-th smallest member by direct scan.
std::optional<mpz_class> kthByScan(const SymbolSet& v, std::uint64_t t, long limit) {
  std::uint64_t seen = 0;
  for (long c = 1; c <= limit; ++c) {
    if (v.contains(mpz_class(c)) && ++seen == t) return mpz_class(c);
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("membership agrees with each kind's definition") {
  CHECK(SymbolSet::all().contains(1));
  CHECK(SymbolSet::all().contains(1000000));
  CHECK_FALSE(SymbolSet::all().contains(0));

  const SymbolSet f = SymbolSet::finiteSet({2, 5, 9});
  for (long c = 1; c <= 12; ++c)
    CHECK(f.contains(c) == (c == 2 || c == 5 || c == 9));

  const SymbolSet u = SymbolSet::upTo(4);
  for (long c = 1; c <= 8; ++c) CHECK(u.contains(c) == (c <= 4));

  const SymbolSet t = SymbolSet::tailFrom(3);
  for (long c = 1; c <= 8; ++c) CHECK(t.contains(c) == (c > 3));

  const SymbolSet p = SymbolSet::progression(3, 5);  // 3, 8, 13, ...
  for (long c = 1; c <= 20; ++c) CHECK(p.contains(c) == (c >= 3 && (c - 3) % 5 == 0));

  const SymbolSet cl = SymbolSet::complementList({2, 6});
  for (long c = 1; c <= 10; ++c) CHECK(cl.contains(c) == (c != 2 && c != 6));

  const SymbolSet ca = SymbolSet::complementArithmetic(3, 3);  // drop 3, 6, 9, ...
  for (long c = 1; c <= 15; ++c) CHECK(ca.contains(c) == (c % 3 != 0 || c < 3));
}

TEST_CASE("kthElement matches a direct membership scan") {
  for (const SymbolSet& v : sampleSets()) {
    for (std::uint64_t t = 1; t <= 25; ++t) {
      const auto got = v.kthElement(t);
      const auto want = kthByScan(v, t, 400);
      if (want) {
        REQUIRE(got.has_value());
        CHECK(*got == *want);
      } else if (v.isFinite()) {
        CHECK_FALSE(got.has_value());
      }
    }
    CHECK(v.minElement() == *v.kthElement(1));
  }
}

TEST_CASE("maxElement set exactly for the finite kinds") {
  CHECK(*SymbolSet::finiteSet({2, 5, 9}).maxElement() == 9);
  CHECK(*SymbolSet::upTo(4).maxElement() == 4);
  CHECK_FALSE(SymbolSet::all().maxElement().has_value());
  CHECK_FALSE(SymbolSet::tailFrom(2).maxElement().has_value());
  CHECK_FALSE(SymbolSet::progression(1, 2).maxElement().has_value());
  CHECK_FALSE(SymbolSet::complementList({3}).maxElement().has_value());
  CHECK(SymbolSet::finiteSet({2}).isFinite());
  CHECK(SymbolSet::upTo(9).isFinite());
  CHECK_FALSE(SymbolSet::complementArithmetic(2, 2).isFinite());
}

TEST_CASE("tail product sum: telescoping closed forms") {
  // sum_{c > N} 1/(c(c+1)) = 1/(N+1).
  for (long n = 0; n <= 20; ++n)
    CHECK(tailProductSum(n, {0, 1}) == Rational(1, n + 1));
  // sum_{c > N} 1/((c+2)(c+3)) = 1/(N+3).
  CHECK(tailProductSum(5, {2, 3}) == Rational(1, 8));
  // Independent partial-sum bracket for a three-factor tail.
  const Rational s = tailProductSum(1, {0, 1, 2});
  Rational partial;
  for (long c = 2; c <= 400; ++c)
    partial += Rational(1, mpz_class(c) * (c + 1) * (c + 2));
  CHECK(partial < s);
  CHECK(s < partial + Rational(1, 400));  // coarse tail bound
  // Exact: sum_{c > N} 1/(c(c+1)(c+2)) = 1/(2(N+1)(N+2)).
  CHECK(tailProductSum(1, {0, 1, 2}) == Rational(1, 12));
  CHECK(tailProductSum(3, {0, 1, 2}) == Rational(1, 40));
  CHECK_THROWS_AS(tailProductSum(1, {0}), std::domain_error);
  CHECK_THROWS_AS(tailProductSum(1, {2, 2}), std::domain_error);
}

TEST_CASE("progression tail sum brackets its partial sums") {
  std::mt19937_64 gen(71);
  std::uniform_int_distribution<long> c0d(1, 10), dd(1, 6);
  for (int i = 0; i < 60; ++i) {
    const mpz_class c0(c0d(gen)), d(dd(gen));
    const Enclosure e = progressionTailSum(c0, d, {0, 1});
    Rational partial;
    for (long j = 0; j < 500; ++j) {
      const mpz_class c = c0 + j * d;
      partial += Rational(1, mpz_class(c * (c + 1)));
    }
    // True value lies between the partial sum and partial + remaining tail.
    CHECK(e.hi() >= partial);
    CHECK(e.lo() <= partial + Rational(1, mpz_class(c0 + 500 * d)));
    CHECK(e.lo() >= partial - e.width());
  }
  // Stride 1 degenerates to the exact telescoping sum over c >= c0.
  const Enclosure whole = progressionTailSum(4, 1, {0, 1});
  CHECK(whole.contains(Rational(1, 4)));
}

TEST_CASE("admissible fraction: closed forms for the elementary kinds") {
  // Children fractions tile: sum over all c of f_c(sigma+1) = 1.
  for (long sigma : {0L, 1L, 2L, 7L, 31L}) {
    CHECK(SymbolSet::all().admissibleFraction(sigma) == Enclosure(Rational(1)));
    // UpTo(m) keeps m/(sigma+m+1); TailFrom(v) keeps (sigma+1)/(sigma+v+1).
    for (long m : {1L, 3L, 10L})
      CHECK(SymbolSet::upTo(m).admissibleFraction(sigma) ==
            Enclosure(Rational(m, sigma + m + 1)));
    for (long v : {0L, 1L, 5L})
      CHECK(SymbolSet::tailFrom(v).admissibleFraction(sigma) ==
            Enclosure(Rational(sigma + 1, sigma + v + 1)));
  }
}

TEST_CASE("admissible fraction agrees with the brute child-ratio sum") {
  for (const SymbolSet& v : sampleSets()) {
    for (long sigma : {0L, 1L, 4L, 9L}) {
      // Oracle: add child ratios member by member, then bound the rest by
      // the full tail beyond the last member considered.
      Rational partial;
      mpz_class last = 0;
      for (long c = 1; c <= 3000; ++c) {
        if (!v.contains(c)) continue;
        partial += childRatioAt(sigma, c);
        last = c;
      }
      // Everything beyond 3000 fits inside the plain tail fraction.
      const Rational rest =
          Rational(sigma + 1, sigma + 3000 + 1);  // sum of all children > 3000
      const Enclosure got = v.admissibleFraction(sigma);
      CHECK(got.hi() >= partial);
      CHECK(got.lo() <= partial + rest);
    }
  }
}

TEST_CASE("admissible fraction range bounds every larger sigma") {
  for (const SymbolSet& v : sampleSets()) {
    const Enclosure range = v.admissibleFractionRange(3);
    for (long sigma = 3; sigma <= 40; ++sigma) {
      const Enclosure at = v.admissibleFraction(sigma);
      CHECK(range.lo() <= at.lo());
      CHECK(at.hi() <= range.hi());
    }
  }
}

TEST_CASE("set validation") {
  CHECK_THROWS_AS(SymbolSet::finiteSet({}), std::domain_error);
  CHECK_THROWS_AS(SymbolSet::finiteSet({0, 2}), std::domain_error);
  CHECK(SymbolSet::finiteSet({2, 2}).elements() == std::vector<mpz_class>{2});
  CHECK_THROWS_AS(SymbolSet::upTo(0), std::domain_error);
  CHECK_THROWS_AS(SymbolSet::tailFrom(-1), std::domain_error);
  CHECK_THROWS_AS(SymbolSet::progression(0, 2), std::domain_error);
  CHECK_THROWS_AS(SymbolSet::progression(2, 0), std::domain_error);
  CHECK(SymbolSet::complementList({}).contains(1));  // nothing excluded
  CHECK_THROWS_AS(SymbolSet::complementArithmetic(0, 2), std::domain_error);
  CHECK_THROWS_AS(SymbolSet::complementArithmetic(2, 0), std::domain_error);
  CHECK_THROWS_AS(SymbolSet::complementArithmetic(1, 1), std::domain_error);
}

TEST_CASE("describe is stable and parseable-looking") {
  CHECK(SymbolSet::all().describe() == "all");
  CHECK(SymbolSet::upTo(4).describe() == "upto:4");
  CHECK(SymbolSet::tailFrom(3).describe() == "tail:3");
  CHECK(SymbolSet::finiteSet({2, 5}).describe() == "finite:2,5");
}
