#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"

#include "ostro/constraint_family.hpp"
#include "ostro/measure.hpp"
#include "ostro/symbol_set.hpp"

#include "test_util.hpp"

using namespace ostro;

namespace {

MeasureOptions fastOpts() {
  MeasureOptions o;
  o.truncation = 128;
  o.sigmaCap = 2000;
  return o;
}

bool traceMentions(const MeasureReport& rep, const std::string& needle) {
  for (const std::string& line : rep.trace)
    if (line.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("all-finite families: engine equals the brute-force enumeration") {
  const std::vector<ConstraintFamily> fams = {
      ConstraintFamily::constant(SymbolSet::upTo(2)),
      ConstraintFamily::constant(SymbolSet::upTo(3)),
      ConstraintFamily::constant(SymbolSet::finiteSet({1})),
      ConstraintFamily::constant(SymbolSet::finiteSet({2, 5})),
      ConstraintFamily::constant(SymbolSet::finiteSet({1, 3, 4})),
      ConstraintFamily::parse("k=1: finite:1,2\nk=2..3: upto:2\ntail-rule: finite:3"),
  };
  for (const ConstraintFamily& fam : fams) {
    const LevelTable t = measureLevels(fam, 4, fastOpts());
    Rational prev(1);
    for (std::size_t depth = 1; depth <= 4; ++depth) {
      const Rational oracle = testutil::bruteLevelMeasure(fam, depth);
      REQUIRE(t.m[depth - 1].isPoint());
      CHECK(t.m[depth - 1].lo() == oracle);
      // Removed layer j+1 is the exact difference of consecutive levels.
      REQUIRE(t.removed[depth - 1].isPoint());
      CHECK(t.removed[depth - 1].lo() == prev - oracle);
      prev = oracle;
    }
  }
}

TEST_CASE("pinned exact levels for the first threshold family") {
  // V = {2, 3, ...} at every rank.
  const ConstraintFamily fam = ConstraintFamily::constant(SymbolSet::tailFrom(1));
  const LevelTable t = measureLevels(fam, 2);
  REQUIRE(t.m.size() == 2);
  CHECK(t.m[0] == Enclosure(Rational(1, 2)));
  CHECK(t.removed[0] == Enclosure(Rational(1, 2)));
  CHECK(t.m[1] == Enclosure(Rational(5, 12)));
  CHECK(t.removed[1] == Enclosure(Rational(1, 12)));

  // Independent oracle for 5/12: summing over the first admissible symbol,
  // lambda(M_2) = sum_{q >= 2} 1/(q(q+2)), and the partial sums telescope:
  // sum_{q=2..Q} 1/(q(q+2)) = (1/2)(1/2 + 1/3 - 1/(Q+1) - 1/(Q+2)).
  const long Q = 1000;
  Rational partial;
  for (long q = 2; q <= Q; ++q) partial += Rational(1, mpz_class(q) * (q + 2));
  CHECK(partial + Rational(1, 2) * (Rational(1, Q + 1) + Rational(1, Q + 2)) ==
        Rational(5, 12));
}

TEST_CASE("single-rank measures match the admissible fraction at the root") {
  for (const SymbolSet& v :
       {SymbolSet::upTo(4), SymbolSet::tailFrom(2), SymbolSet::finiteSet({3, 7}),
        SymbolSet::complementList({1, 4})}) {
    const ConstraintFamily fam = ConstraintFamily::constant(v);
    const Enclosure m1 = admissibleMeasure(fam, 1, fastOpts());
    CHECK(m1 == v.admissibleFraction(0));
  }
}

TEST_CASE("level arrays are consistent across the convenience entry points") {
  const ConstraintFamily fam = ConstraintFamily::constant(SymbolSet::tailFrom(1));
  const MeasureOptions opt = fastOpts();
  const LevelTable t = measureLevels(fam, 3, opt);
  for (std::size_t d = 1; d <= 3; ++d)
    CHECK(admissibleMeasure(fam, d, opt) == t.m[d - 1]);
  for (std::size_t j = 0; j < 3; ++j)
    CHECK(removedLayerMeasure(fam, j, opt) == t.removed[j]);
}

TEST_CASE("levels decompose: lambda(M_j) = lambda(M_{j+1}) + removed layer") {
  const std::vector<ConstraintFamily> fams = {
      ConstraintFamily::constant(SymbolSet::tailFrom(1)),
      ConstraintFamily::constant(SymbolSet::complementArithmetic(2, 2)),
      ConstraintFamily::constant(SymbolSet::progression(1, 2)),
      ConstraintFamily::parse("k=1: tail:2\ntail-rule: all"),
  };
  for (const ConstraintFamily& fam : fams) {
    const LevelTable t = measureLevels(fam, 4, fastOpts());
    // Unit interval splits at rank 1.
    CHECK(t.m[0].lo() + t.removed[0].lo() <= Rational(1));
    CHECK(t.m[0].hi() + t.removed[0].hi() >= Rational(1));
    for (std::size_t j = 1; j < 4; ++j) {
      // As enclosures of the same real identity, the sum must overlap m[j-1].
      CHECK(t.m[j].lo() + t.removed[j].lo() <= t.m[j - 1].hi());
      CHECK(t.m[j].hi() + t.removed[j].hi() >= t.m[j - 1].lo());
      // Levels shrink.
      CHECK(t.m[j].lo() <= t.m[j - 1].hi());
    }
  }
}

TEST_CASE("tighter truncation budgets stay consistent") {
  const ConstraintFamily fam = ConstraintFamily::constant(SymbolSet::progression(2, 3));
  MeasureOptions small = fastOpts();
  small.truncation = 32;
  MeasureOptions big = fastOpts();
  big.truncation = 256;
  const LevelTable a = measureLevels(fam, 3, small);
  const LevelTable b = measureLevels(fam, 3, big);
  for (std::size_t k = 0; k < 3; ++k) {
    // Both bracket the same true value, so they must intersect...
    CHECK(a.m[k].lo() <= b.m[k].hi());
    CHECK(b.m[k].lo() <= a.m[k].hi());
    // ... and the bigger budget is at least as tight.
    CHECK(b.m[k].width() <= a.m[k].width());
  }
}

TEST_CASE("adaptive layers: lambda(L_1) = 1 with fast decay and a bracket oracle") {
  const std::vector<Enclosure> layers = aSigmaLayers(3, fastOpts());
  REQUIRE(layers.size() == 3);
  CHECK(layers[0] == Enclosure(Rational(1)));

  // Oracle for lambda(L_2) = sum_c 1/(c(2c+1)): partial sums plus a tail
  // bound sum_{c > Q} 1/(c(2c+1)) < sum_{c > Q} 1/(2c^2) < 1/(2Q).
  Rational partial;
  const long Q = 3000;
  for (long c = 1; c <= Q; ++c) partial += Rational(1, mpz_class(c) * (2 * c + 1));
  CHECK(layers[1].hi() >= partial);
  CHECK(layers[1].lo() <= partial + Rational(1, 2 * Q));
  // Decay: each layer is at most two thirds of the previous upper end.
  CHECK(layers[1].hi() < Rational(2, 3));
  CHECK(layers[2].hi() < Rational(2, 3) * layers[1].hi());
}

TEST_CASE("zero certificate: bounded symbols cite the harmonic divergence") {
  for (long m = 1; m <= 4; ++m) {
    const ConstraintFamily fam = ConstraintFamily::constant(SymbolSet::upTo(m));
    const MeasureReport rep = zeroMeasureCertificate(fam, 4, fastOpts());
    CHECK(rep.verdict == Verdict::ZeroCertified);
    CHECK(rep.theorem == "harmonic-reciprocal-divergence");
    CHECK(traceMentions(rep, "level"));
  }
  // Cyclic all-threshold variant stays in the same family of certificates.
  const ConstraintFamily cyc =
      ConstraintFamily::parse("k=1: upto:2\nk=2: upto:3\ntail-rule: upto:2");
  CHECK(zeroMeasureCertificate(cyc, 3, fastOpts()).theorem ==
        "harmonic-reciprocal-divergence");
}

TEST_CASE("zero certificate: bounded-gap exclusions") {
  const ConstraintFamily odd = ConstraintFamily::constant(SymbolSet::progression(1, 2));
  const MeasureReport repOdd = zeroMeasureCertificate(odd, 3, fastOpts());
  CHECK(repOdd.verdict == Verdict::ZeroCertified);
  CHECK(repOdd.theorem == "bounded-gap-exclusions");
  CHECK(traceMentions(repOdd, "1/(a_1*d)"));

  const ConstraintFamily gap2 =
      ConstraintFamily::constant(SymbolSet::complementArithmetic(2, 2));
  CHECK(zeroMeasureCertificate(gap2, 3, fastOpts()).theorem == "bounded-gap-exclusions");
  const ConstraintFamily gap3 =
      ConstraintFamily::constant(SymbolSet::complementArithmetic(3, 3));
  CHECK(zeroMeasureCertificate(gap3, 3, fastOpts()).theorem == "bounded-gap-exclusions");
}

TEST_CASE("zero certificate: finite alphabets and the adaptive family") {
  const ConstraintFamily fin = ConstraintFamily::constant(SymbolSet::finiteSet({2, 5}));
  const MeasureReport repFin = zeroMeasureCertificate(fin, 3, fastOpts());
  CHECK(repFin.verdict == Verdict::ZeroCertified);
  CHECK(repFin.theorem == "bounded-symbol-count");

  const MeasureReport repAd = zeroMeasureCertificate(ConstraintFamily::adaptiveSigma(), 3,
                                                     fastOpts());
  CHECK(repAd.verdict == Verdict::ZeroCertified);
  CHECK(repAd.theorem == "dominated-symbol-growth");
}

TEST_CASE("zero certificate: full alphabets stay inconclusive") {
  const MeasureReport rep =
      zeroMeasureCertificate(ConstraintFamily::constant(SymbolSet::all()), 3, fastOpts());
  CHECK(rep.verdict == Verdict::Inconclusive);
  CHECK(rep.theorem.empty());
}

TEST_CASE("bounded symbol report records the union argument") {
  const MeasureReport rep = boundedSymbolSetReport(3, 4, fastOpts());
  CHECK(rep.verdict == Verdict::ZeroCertified);
  CHECK(rep.theorem == "harmonic-reciprocal-divergence");
  CHECK(traceMentions(rep, "union"));
}

TEST_CASE("positive certificate: constant threshold family") {
  const ConstraintFamily fam = ConstraintFamily::constant(SymbolSet::tailFrom(1));
  const MeasureReport rep = positiveMeasureCertificate(fam, 2);
  CHECK(rep.verdict == Verdict::PositiveCertified);
  CHECK(rep.theorem == "constant-tail-bound");
  REQUIRE(rep.lowerBound.has_value());
  CHECK(*rep.lowerBound == Rational(1, 3));
  // The bound is honest: it cannot exceed any level measure.
  const LevelTable t = measureLevels(fam, 3);
  for (const Enclosure& level : t.m) CHECK(*rep.lowerBound <= level.hi());
  CHECK(traceMentions(rep, "1/(m+1)^2"));
}

TEST_CASE("positive certificate: bounded thresholds with explicit ranks") {
  const ConstraintFamily fam = ConstraintFamily::parse("k=1: tail:3\ntail-rule: tail:1");
  const MeasureReport rep = positiveMeasureCertificate(fam, 2, fastOpts());
  CHECK(rep.verdict == Verdict::PositiveCertified);
  CHECK(rep.theorem == "constant-subset-witness");
  REQUIRE(rep.lowerBound.has_value());
  // Never below the squared-threshold floor 1/(D0+1)^2 with D0 = 3.
  CHECK(*rep.lowerBound >= Rational(1, 16));
}

TEST_CASE("positive certificate: polynomial thresholds via a witness cylinder") {
  // v_k = k, so V_k = {k+1, k+2, ...}.
  const ConstraintFamily fam = ConstraintFamily::parse("tail:poly:0,1");
  const MeasureReport rep = positiveMeasureCertificate(fam, 3);
  CHECK(rep.verdict == Verdict::PositiveCertified);
  CHECK(rep.theorem == "tail-ratio-witness");
  REQUIRE(rep.lowerBound.has_value());
  CHECK(*rep.lowerBound == Rational(1, 26520));
  // Consistency with the level engine: the bound sits below lambda(M_4).
  const LevelTable t = measureLevels(fam, 4);
  CHECK(*rep.lowerBound <= t.m[3].hi());
}

TEST_CASE("positive certificate: shapes without a certificate stay inconclusive") {
  // Geometric threshold growth has unbounded ratio at stretch >= 2.
  const MeasureReport geom =
      positiveMeasureCertificate(ConstraintFamily::parse("tail:geom:1,2"), 2, fastOpts());
  CHECK(geom.verdict == Verdict::Inconclusive);
  // Non-threshold explicit rank blocks the argument.
  const MeasureReport mixed = positiveMeasureCertificate(
      ConstraintFamily::parse("k=1: finite:2,4\ntail-rule: tail:1"), 2, fastOpts());
  CHECK(mixed.verdict == Verdict::Inconclusive);
  // Adaptive family concentrates on a null set; no positive mass.
  const MeasureReport ad =
      positiveMeasureCertificate(ConstraintFamily::adaptiveSigma(), 2, fastOpts());
  CHECK(ad.verdict == Verdict::Inconclusive);
}

TEST_CASE("family parsing: grammar and dispatch") {
  CHECK(ConstraintFamily::parse("all").describe() ==
        ConstraintFamily::constant(SymbolSet::all()).describe());
  CHECK(ConstraintFamily::parse("tail:1").tail().kind == TailRule::Kind::ConstantSet);
  CHECK(ConstraintFamily::parse("asigma").hasAdaptiveTail());
  const ConstraintFamily multi =
      ConstraintFamily::parse("# comment\nk=1..2: upto:3\nk=3: finite:1,5\ntail-rule: all");
  CHECK(multi.horizon() == 3);
  CHECK(multi.planAt(1).set.kind() == SymbolSet::Kind::UpTo);
  CHECK(multi.planAt(3).set.kind() == SymbolSet::Kind::FiniteSet);
  CHECK(multi.planAt(9).set.kind() == SymbolSet::Kind::All);
  const ConstraintFamily arith = ConstraintFamily::parse("complement:3,6,9,...");
  CHECK(arith.planAt(1).set.kind() == SymbolSet::Kind::ComplementArithmetic);
  const ConstraintFamily list = ConstraintFamily::parse("complement:3,6");
  CHECK(list.planAt(1).set.kind() == SymbolSet::Kind::ComplementList);

  CHECK_THROWS_AS(ConstraintFamily::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(ConstraintFamily::parse("k=1: all"), std::invalid_argument);  // no tail
  CHECK_THROWS_AS(ConstraintFamily::parse("k=1: all\nk=1: upto:2\ntail-rule: all"),
                  std::invalid_argument);
  CHECK_THROWS_AS(ConstraintFamily::parse("k=2: all\ntail-rule: all"),
                  std::invalid_argument);
  CHECK_THROWS_AS(ConstraintFamily::parse("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(ConstraintFamily::parse("tail:poly:1,-2"), std::invalid_argument);
}

TEST_CASE("polynomial and geometric tails generate growing thresholds") {
  const ConstraintFamily poly = ConstraintFamily::parse("tail:poly:1,0,1");  // 1 + k^2
  CHECK(poly.planAt(2).set.kind() == SymbolSet::Kind::TailFrom);
  CHECK(poly.planAt(2).set.param() == 5);
  CHECK(poly.planAt(3).set.param() == 10);
  const ConstraintFamily geom = ConstraintFamily::parse("tail:geom:3,2");  // 3 * 2^k
  CHECK(geom.planAt(1).set.param() == 6);
  CHECK(geom.planAt(4).set.param() == 48);
}

TEST_CASE("measure operations validate their inputs") {
  const ConstraintFamily fam = ConstraintFamily::constant(SymbolSet::all());
  CHECK_THROWS_AS(admissibleMeasure(fam, 0), std::domain_error);
  CHECK_THROWS_AS(measureLevels(fam, 0), std::domain_error);
  CHECK_THROWS_AS(boundedSymbolSetReport(0, 3), std::domain_error);
}
