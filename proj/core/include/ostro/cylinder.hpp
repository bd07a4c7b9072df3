/// Cylindrical sets: the closed intervals of all numbers whose expansion
/// starts with a fixed symbol base.
///
/// A rank-m cylinder with base (c_1, ..., c_m) has length
/// 1/(sigma_1 ... sigma_m (sigma_m + 1)) where sigma_k = c_1 + ... + c_k.
/// The empty base is admitted as a rank-0 sentinel denoting [0, 1].
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ostro/rational.hpp"

namespace ostro {

class Cylinder {
 public:
  /// Validates every base symbol >= 1; an empty base is the unit interval.
  explicit Cylinder(std::vector<mpz_class> base);

  static Cylinder unit() { return Cylinder({}); }

  const std::vector<mpz_class>& base() const { return base_; }
  std::size_t rank() const { return base_.size(); }

  /// sigma_m = c_1 + ... + c_m (zero for the rank-0 sentinel).
  const mpz_class& sigma() const { return sigma_; }

  /// Closed endpoints (a, b) with a < b.  The right endpoint of the base's
  /// own value and the value with the last symbol incremented, ordered.
  std::pair<Rational, Rational> endpoints() const;

  Rational length() const;

  Cylinder child(const mpz_class& s) const;

  /// Strict interior test; the two closed endpoints are excluded.
  bool interiorContains(const Rational& x) const;

 private:
  std::vector<mpz_class> base_;
  mpz_class sigma_;
};

enum class CylinderRelation { Equal, Subset, Superset, InteriorDisjoint };

/// Equal on identical bases; Subset when a's base strictly extends b's;
/// otherwise the interiors are disjoint (closures may share an endpoint).
CylinderRelation relation(const Cylinder& a, const Cylinder& b);

/// Length ratio of a child to its parent as a pure function of
/// a = 1 + sigma and the child symbol s:
///   f_s(a) = a / ((a + s - 1)(a + s)),   max over a equal to 1/(2(2s-1)).
Rational childRatioAt(const mpz_class& sigma, const mpz_class& s);

/// length(base + [s]) / length(base) = f_s(1 + sigma_m).
Rational childRatio(const Cylinder& c, const mpz_class& s);

/// Measure of the union of children s = 1..k:  k/(sigma_m + k + 1) * |c|.
Rational childrenPrefixMeasure(const Cylinder& c, const mpz_class& k);

/// Measure of the union of children s > k:  (sigma_m + 1)/(sigma_m + k + 1) * |c|.
Rational childrenTailMeasure(const Cylinder& c, const mpz_class& k);

}  // namespace ostro
