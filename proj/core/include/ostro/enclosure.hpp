/// Closed rational intervals used as certified enclosures.
///
/// An Enclosure [lo, hi] asserts that the (possibly irrational) quantity it
/// tracks lies between two exact rationals.  Arithmetic is outward-directed:
/// the result of an operation always contains every value reachable from
/// points of the operands, so a chain of enclosure operations stays sound.
#pragma once

#include <span>
#include <vector>

#include "ostro/rational.hpp"

namespace ostro {

class Enclosure {
 public:
  Enclosure() : lo_(0), hi_(0) {}
  Enclosure(Rational point) : lo_(point), hi_(std::move(point)) {}  // NOLINT
  Enclosure(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw std::domain_error("enclosure with lo > hi");
  }

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  bool isPoint() const { return lo_ == hi_; }

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Enclosure& e) const { return lo_ <= e.lo_ && e.hi_ <= hi_; }

  friend Enclosure operator+(const Enclosure& a, const Enclosure& b) {
    return Enclosure(a.lo_ + b.lo_, a.hi_ + b.hi_);
  }
  /// Directional difference: contains x - y for all x in a, y in b.
  friend Enclosure operator-(const Enclosure& a, const Enclosure& b) {
    return Enclosure(a.lo_ - b.hi_, a.hi_ - b.lo_);
  }
  friend Enclosure operator*(const Enclosure& a, const Enclosure& b);

  Enclosure& operator+=(const Enclosure& o) {
    lo_ += o.lo_;
    hi_ += o.hi_;
    return *this;
  }

  /// Orientation-aware scaling: a negative factor swaps the endpoints.
  Enclosure scale(const Rational& f) const {
    if (f.isNegative()) return Enclosure(hi_ * f, lo_ * f);
    return Enclosure(lo_ * f, hi_ * f);
  }

  static Enclosure sum(std::span<const Enclosure> parts);
  static Enclosure hull(const Enclosure& a, const Enclosure& b);
  /// Tightest interval inside both; both must bound the same quantity.
  static Enclosure intersect(const Enclosure& a, const Enclosure& b);

  friend bool operator==(const Enclosure& a, const Enclosure& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  Rational lo_, hi_;
};

}  // namespace ostro
