/// Certified Lebesgue-measure computation for symbol-constraint sets.
///
/// For a constraint family {V_k}, M_k denotes the union of all rank-k
/// cylinders whose base symbols satisfy c_i in V_i for i <= k, and
/// Mbar_{k+1} = M_k minus M_{k+1} is the layer removed when descending one
/// rank.  The engine runs exact dynamic programming over (rank, sigma)
/// states: a state's mass is the total length of tracked admissible
/// cylinders with symbol sum sigma, and the transition to symbol sum
/// sigma' = sigma + c scales by (sigma+1)/(sigma'(sigma'+1)).  Mass that
/// leaves tracking (enumeration budget or sigma cap) is carried as an
/// interval and propagated by per-rank admissible-fraction ranges, so every
/// reported enclosure is sound.
///
/// Verdicts about the limit measure are only ever issued from symbolic
/// shape analysis (the certificate catalog below); computed enclosures
/// alone never certify a zero or positive limit.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ostro/constraint_family.hpp"
#include "ostro/enclosure.hpp"

namespace ostro {

struct MeasureOptions {
  /// Per-level enumeration budget: first T admissible symbols are tracked.
  std::size_t truncation = 512;
  /// Dynamic-programming cap on the symbol sum sigma.
  std::uint64_t sigmaCap = 10000;
  /// Bound on the witness symbol searched by positive certificates.
  std::uint64_t searchLimit = 1000000;
};

enum class Verdict { ZeroCertified, PositiveCertified, Inconclusive };

/// Certificate identifiers:
///   "dominated-symbol-growth"        adaptive family, layer decay < 2/3
///   "harmonic-reciprocal-divergence" V_k = {1..m_k}, sum 1/m_k diverges;
///                                    per-level removal ratio > 1/(m_k+1)
///   "bounded-gap-exclusions"         excluded symbols with gaps <= d;
///                                    removal ratio > 1/(a_1 d)
///   "bounded-symbol-count"           all V_k finite with <= N symbols;
///                                    lambda(M_k) <= N^k/(k+1)! -> 0
///   "tail-ratio-witness"             V_k = {v_k+1, ...}, sup v_{k+1}/v_k =
///                                    C_0 < 2; geometric removal bound on a
///                                    witness cylinder
///   "constant-tail-bound"            V = {m+1, m+2, ...} constant; bound
///                                    lambda >= lambda(M_1) - 2 lambda(Mbar_2)
///   "constant-subset-witness"        bounded v_k <= D_0; the constant-D_0
///                                    family is a subset witness
struct MeasureReport {
  std::size_t depth = 0;
  Enclosure mkEnclosure;                 // lambda(M_depth)
  std::vector<Enclosure> levelMeasures;  // lambda(M_k), k = 1..depth
  std::vector<Enclosure> removedLayers;  // lambda(Mbar_{j+1}), j = 0..depth-1
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Rational> lowerBound;    // set by positive certificates
  std::string theorem;                   // certificate identifier, "" if none
  std::vector<std::string> trace;
};

struct LevelTable {
  std::vector<Enclosure> m;        // m[k-1] = lambda(M_k)
  std::vector<Enclosure> removed;  // removed[j] = lambda(Mbar_{j+1})
};

/// Runs the state engine down to maxDepth and returns every level.
LevelTable measureLevels(const ConstraintFamily& f, std::size_t maxDepth,
                         const MeasureOptions& opt = {});

/// Enclosure of lambda(M_depth); depth >= 1.
Enclosure admissibleMeasure(const ConstraintFamily& f, std::size_t depth,
                            const MeasureOptions& opt = {});

/// Enclosure of lambda(Mbar_{depth+1}); depth >= 0 (depth 0 gives the mass
/// removed from [0,1] at the first rank).
Enclosure removedLayerMeasure(const ConstraintFamily& f, std::size_t depth,
                              const MeasureOptions& opt = {});

/// Symbolic zero-measure certification; see the certificate catalog above.
MeasureReport zeroMeasureCertificate(const ConstraintFamily& f, std::size_t maxDepth,
                                     const MeasureOptions& opt = {});

/// Symbolic positive-measure certification for threshold-tail families.
MeasureReport positiveMeasureCertificate(const ConstraintFamily& f, std::size_t maxDepth,
                                         const MeasureOptions& opt = {});

/// Layer measures lambda(L_k) for the adaptive family (each symbol exceeds
/// the sum of all previous ones): lambda(L_1) = 1 and the upper ends decay
/// faster than (2/3)^{k-1}.
std::vector<Enclosure> aSigmaLayers(std::size_t maxDepth, const MeasureOptions& opt = {});

/// Zero certificate for the bounded-symbol family V_k = {1..m}, with the
/// union-over-m conclusion recorded in the trace.
MeasureReport boundedSymbolSetReport(const mpz_class& m, std::size_t maxDepth,
                                     const MeasureOptions& opt = {});

}  // namespace ostro
