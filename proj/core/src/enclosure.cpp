#include "ostro/enclosure.hpp"

#include <algorithm>

namespace ostro {

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  const Rational c[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  return Enclosure(*std::min_element(c, c + 4), *std::max_element(c, c + 4));
}

Enclosure Enclosure::sum(std::span<const Enclosure> parts) {
  Enclosure acc;
  for (const Enclosure& p : parts) acc += p;
  return acc;
}

Enclosure Enclosure::hull(const Enclosure& a, const Enclosure& b) {
  return Enclosure(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
}

Enclosure Enclosure::intersect(const Enclosure& a, const Enclosure& b) {
  const Rational lo = std::max(a.lo_, b.lo_);
  const Rational hi = std::min(a.hi_, b.hi_);
  if (lo > hi) throw std::domain_error("disjoint enclosures of the same quantity");
  return Enclosure(lo, hi);
}

}  // namespace ostro
