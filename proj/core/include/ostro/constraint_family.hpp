/// Constraint families: one admissible-symbol set per rank, given by a
/// finite description (explicit rules up to a horizon plus a tail rule).
///
/// Tail rules cover constant and cyclic set repetition, threshold tails
/// whose cutoff grows polynomially or geometrically with the rank
/// (v_k = P(k) or v_k = a * r^k, giving V_k = {v_k + 1, ...}), and the
/// adaptive rule V_{k+1} = {c : c > sigma_k} that depends on the running
/// symbol sum rather than the rank alone.
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "ostro/symbol_set.hpp"

namespace ostro {

struct TailRule {
  enum class Kind {
    ConstantSet,
    CyclicSets,
    TailFromPolynomial,  // V_k = {P(k)+1, ...}
    TailFromGeometric,   // V_k = {a*r^k + 1, ...}
    AdaptiveSigma,       // V_k(sigma) = {c : c > sigma}
  };

  Kind kind = Kind::ConstantSet;
  std::vector<SymbolSet> sets;        // ConstantSet: one; CyclicSets: cycle
  std::vector<mpz_class> polyCoeffs;  // P(k) = sum coeffs[i] * k^i
  mpz_class geomBase = 0, geomRatio = 0;
};

/// The set active at a given rank, or the adaptive marker: when adaptive is
/// true the admissible set is {c : c > sigma} for the incoming symbol sum.
struct RankPlan {
  bool adaptive = false;
  SymbolSet set = SymbolSet::all();
};

class ConstraintFamily {
 public:
  static ConstraintFamily constant(SymbolSet v);
  static ConstraintFamily ofRules(std::vector<SymbolSet> explicitRules, TailRule tail);
  /// V_1 = all symbols, then adaptively {c : c > sigma_{k-1}}.
  static ConstraintFamily adaptiveSigma();

  /// Accepts either a full spec (lines `k=<rank|lo..hi>: <rule>` and a final
  /// `tail-rule: <rule>`) or a single inline rule applied to every rank.
  /// Rules: all | asigma | finite:LIST | upto:M | tail:V | tail:poly:C0,C1,..
  /// | tail:geom:A,R | complement:LIST | complement:A1,A2,A3,... (arithmetic
  /// when the list ends with ",...").
  static ConstraintFamily parse(std::string_view text);

  RankPlan planAt(std::size_t rank) const;  // rank >= 1
  std::size_t horizon() const { return explicit_.size(); }
  const std::vector<SymbolSet>& explicitRules() const { return explicit_; }
  const TailRule& tail() const { return tail_; }

  /// True when some rank beyond every horizon uses the adaptive rule.
  bool hasAdaptiveTail() const { return tail_.kind == TailRule::Kind::AdaptiveSigma; }

  std::string describe() const;

 private:
  ConstraintFamily(std::vector<SymbolSet> ex, TailRule tail)
      : explicit_(std::move(ex)), tail_(std::move(tail)) {}

  std::vector<SymbolSet> explicit_;
  TailRule tail_;
};

}  // namespace ostro
