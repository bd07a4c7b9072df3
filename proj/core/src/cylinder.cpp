#include "ostro/cylinder.hpp"

#include <algorithm>
#include <stdexcept>

#include "ostro/expansion.hpp"

namespace ostro {

Cylinder::Cylinder(std::vector<mpz_class> base) : base_(std::move(base)), sigma_(0) {
  for (const mpz_class& c : base_) {
    if (c < 1) throw std::domain_error("cylinder base symbol below 1");
    sigma_ += c;
  }
}

std::pair<Rational, Rational> Cylinder::endpoints() const {
  if (rank() == 0) return {Rational(0), Rational(1)};
  const Rational x1 = evaluate(O1Expansion(base_));
  std::vector<mpz_class> bumped = base_;
  bumped.back() += 1;
  const Rational x2 = evaluate(O1Expansion(std::move(bumped)));
  return x1 < x2 ? std::make_pair(x1, x2) : std::make_pair(x2, x1);
}

Rational Cylinder::length() const {
  mpz_class prod = 1, acc = 0;
  for (const mpz_class& c : base_) {
    acc += c;
    prod *= acc;
  }
  prod *= acc + 1;
  return Rational(1) / Rational(prod);
}

Cylinder Cylinder::child(const mpz_class& s) const {
  if (s < 1) throw std::domain_error("child symbol below 1");
  std::vector<mpz_class> b = base_;
  b.push_back(s);
  return Cylinder(std::move(b));
}

bool Cylinder::interiorContains(const Rational& x) const {
  const auto [a, b] = endpoints();
  return a < x && x < b;
}

CylinderRelation relation(const Cylinder& a, const Cylinder& b) {
  const auto& ba = a.base();
  const auto& bb = b.base();
  const std::size_t common = std::min(ba.size(), bb.size());
  for (std::size_t i = 0; i < common; ++i)
    if (ba[i] != bb[i]) return CylinderRelation::InteriorDisjoint;
  if (ba.size() == bb.size()) return CylinderRelation::Equal;
  return ba.size() > bb.size() ? CylinderRelation::Subset : CylinderRelation::Superset;
}

Rational childRatioAt(const mpz_class& sigma, const mpz_class& s) {
  if (sigma < 0 || s < 1) throw std::domain_error("ratio arguments out of range");
  const mpz_class a = sigma + 1;
  return Rational(a, (a + s - 1) * (a + s));
}

Rational childRatio(const Cylinder& c, const mpz_class& s) {
  return childRatioAt(c.sigma(), s);
}

Rational childrenPrefixMeasure(const Cylinder& c, const mpz_class& k) {
  if (k < 1) throw std::domain_error("prefix bound below 1");
  return Rational(k, c.sigma() + k + 1) * c.length();
}

Rational childrenTailMeasure(const Cylinder& c, const mpz_class& k) {
  if (k < 0) throw std::domain_error("negative tail bound");
  return Rational(c.sigma() + 1, c.sigma() + k + 1) * c.length();
}

}  // namespace ostro
