#include "ostro/continued_fraction.hpp"

#include <cassert>
#include <stdexcept>

#include "ostro/cylinder.hpp"

namespace ostro {

CFExpansion::CFExpansion(std::vector<mpz_class> quotients) : q_(std::move(quotients)) {
  for (const mpz_class& a : q_)
    if (a < 1) throw std::domain_error("partial quotient below 1");
}

std::vector<mpz_class> CFExpansion::convergentDenominators() const {
  std::vector<mpz_class> out;
  out.reserve(q_.size());
  mpz_class prev = 0, cur = 1;  // Q_{-1}, Q_0
  for (const mpz_class& a : q_) {
    mpz_class next = a * cur + prev;
    prev = cur;
    cur = next;
    out.push_back(cur);
  }
  return out;
}

CFExpansion cfExpand(const Rational& x) {
  if (!(Rational(0) < x && x < Rational(1)))
    throw std::domain_error("cfExpand requires 0 < x < 1");
  // Euclid on (den, num): x = 1/(a_1 + 1/(a_2 + ...)).
  mpz_class p = x.num(), q = x.den();
  std::vector<mpz_class> out;
  while (p != 0) {
    mpz_class a, r;
    mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    out.push_back(a);
    q = p;
    p = r;
  }
  assert(out.size() == 1 || out.back() >= 2);
  return CFExpansion(std::move(out));
}

Rational cfEvaluate(const CFExpansion& e) {
  if (e.size() == 0) throw std::domain_error("evaluate of empty continued fraction");
  Rational t(0);
  for (std::size_t k = e.size(); k-- > 0;)
    t = Rational(1) / (Rational(e.quotients()[k]) + t);
  return t;
}

std::pair<Rational, Rational> cfCylinderEndpoints(const CFExpansion& base) {
  if (base.size() == 0) return {Rational(0), Rational(1)};
  // Convergent numerators and denominators; the cylinder spans the order-m
  // convergent and the mediant with the order-(m-1) convergent.
  mpz_class pPrev = 1, pCur = 0;  // P_{-1}, P_0
  mpz_class qPrev = 0, qCur = 1;  // Q_{-1}, Q_0
  for (const mpz_class& a : base.quotients()) {
    mpz_class pn = a * pCur + pPrev, qn = a * qCur + qPrev;
    pPrev = pCur;
    pCur = pn;
    qPrev = qCur;
    qCur = qn;
  }
  const Rational own(pCur, qCur);
  const Rational mediant(pCur + pPrev, qCur + qPrev);
  return own < mediant ? std::make_pair(own, mediant) : std::make_pair(mediant, own);
}

Rational cfCylinderLength(const CFExpansion& base) {
  const auto [a, b] = cfCylinderEndpoints(base);
  return b - a;
}

Rational cfCylinderRatio(const CFExpansion& base, const mpz_class& s) {
  if (s < 1) throw std::domain_error("child quotient below 1");
  if (base.size() == 0) throw std::domain_error("ratio requires a nonempty base");
  const std::vector<mpz_class> Q = base.convergentDenominators();
  const mpz_class& Qm = Q.back();
  const mpz_class Qprev = base.size() >= 2 ? Q[base.size() - 2] : mpz_class(1);
  const Rational r(Qprev, Qm);
  const Rational sR(s);
  const Rational one(1);
  return (one / (sR * sR)) * (one + r) /
         ((one + r / sR) * (one + one / sR + r / sR));
}

std::pair<Rational, Rational> cfRatioBand(const mpz_class& s) {
  if (s < 1) throw std::domain_error("child quotient below 1");
  return {Rational(1, 3 * s * s), Rational(2, s * s)};
}

std::vector<RatioContrastRow> ratioDecayContrast(const std::vector<mpz_class>& sigmas,
                                                 const mpz_class& s) {
  if (sigmas.empty()) throw std::domain_error("contrast table requires sigma values");
  const auto [lo, hi] = cfRatioBand(s);
  std::vector<RatioContrastRow> rows;
  rows.reserve(sigmas.size());
  for (const mpz_class& sigma : sigmas)
    rows.push_back(RatioContrastRow{sigma, childRatioAt(sigma, s), lo, hi});
  return rows;
}

}  // namespace ostro
