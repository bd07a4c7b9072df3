/// Continued-fraction counterpart used to contrast the two symbol geometries:
/// reciprocal-product child-cylinder ratios decay to zero with the parent's
/// symbol sum, while continued-fraction ratios stay inside (1/(3s^2), 2/s^2).
#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "ostro/rational.hpp"

namespace ostro {

class CFExpansion {
 public:
  /// x = 1/(a_1 + 1/(a_2 + ...)); validates every quotient >= 1.
  explicit CFExpansion(std::vector<mpz_class> quotients);

  const std::vector<mpz_class>& quotients() const { return q_; }
  std::size_t size() const { return q_.size(); }

  /// Convergent denominators Q_k = a_k Q_{k-1} + Q_{k-2}, Q_0 = 1, Q_{-1} = 0;
  /// index 0 holds Q_1.  Strictly increasing from k >= 1.
  std::vector<mpz_class> convergentDenominators() const;

 private:
  std::vector<mpz_class> q_;
};

/// Euclidean partial quotients of x in (0, 1); canonical form has last
/// quotient >= 2 whenever the length is >= 2.
CFExpansion cfExpand(const Rational& x);

/// Exact value of the finite continued fraction.
Rational cfEvaluate(const CFExpansion& e);

/// Closed endpoints of the set of numbers whose expansion starts with the
/// given quotients: built from the order-m and order-(m-1) convergents.
std::pair<Rational, Rational> cfCylinderEndpoints(const CFExpansion& base);

/// Endpoint difference: 1/(Q_m (Q_m + Q_{m-1})).
Rational cfCylinderLength(const CFExpansion& base);

/// Child-to-parent length ratio via the closed formula
///   (1/s^2) * (1 + r) / ((1 + r/s)(1 + 1/s + r/s)),   r = Q_{m-1}/Q_m;
/// inside (1/(3 s^2), 2/s^2), strictly except for the single corner
/// base = [1], s = 1 where it equals the lower endpoint 1/3 (r = 1 there;
/// every longer base has Q_m > Q_{m-1}).
Rational cfCylinderRatio(const CFExpansion& base, const mpz_class& s);

/// Exclusive bounds (1/(3 s^2), 2/s^2) on cfCylinderRatio.
std::pair<Rational, Rational> cfRatioBand(const mpz_class& s);

struct RatioContrastRow {
  mpz_class sigma;
  Rational o1Ratio;   // f_s(1 + sigma): decays to zero
  Rational cfLow;     // 1/(3 s^2): constant floor
  Rational cfHigh;    // 2/s^2: constant ceiling
};

/// One row per sigma value, contrasting the vanishing reciprocal-product
/// ratio with the stationary continued-fraction band for the same child.
std::vector<RatioContrastRow> ratioDecayContrast(const std::vector<mpz_class>& sigmas,
                                                 const mpz_class& s);

}  // namespace ostro
