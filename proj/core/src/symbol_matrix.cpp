#include "ostro/symbol_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace ostro {
namespace {

Rational ratPow(const Rational& r, const mpz_class& e) {
  if (e < 0) throw std::domain_error("negative exponent");
  if (!e.fits_ulong_p()) throw std::overflow_error("exponent too large for exact power");
  const unsigned long n = e.get_ui();
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), r.num().get_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), r.den().get_mpz_t(), n);
  return Rational(num, den);
}

}  // namespace

Column::Column(std::vector<Rational> probs, std::optional<Geometric> continuation)
    : probs_(std::move(probs)), geom_(std::move(continuation)) {
  if (probs_.empty()) throw std::domain_error("column needs at least one probability");
  Rational total;
  for (const Rational& p : probs_) {
    if (p.isNegative()) throw std::domain_error("negative probability");
    total += p;
  }
  if (geom_) {
    if (!(Rational(0) < geom_->ratio && geom_->ratio < Rational(1)))
      throw std::domain_error("continuation ratio must lie in (0, 1)");
    if (geom_->stride < 1) throw std::domain_error("continuation stride must be >= 1");
    if (probs_.back().isZero())
      throw std::domain_error("continuation seed probability must be positive");
    total += probs_.back() * geom_->ratio / (Rational(1) - geom_->ratio);
  }
  if (total != Rational(1))
    throw std::domain_error("column probabilities must sum to 1 exactly");
}

Rational Column::prob(const mpz_class& m) const {
  if (m < 1) return Rational(0);
  if (m <= probs_.size()) return probs_[m.get_ui() - 1];
  if (!geom_) return Rational(0);
  const mpz_class off = m - mpz_class(probs_.size());
  if (off % geom_->stride != 0) return Rational(0);
  return probs_.back() * ratPow(geom_->ratio, off / geom_->stride);
}

Rational Column::cdfBelow(const mpz_class& m) const {
  if (m <= 1) return Rational(0);
  const mpz_class lim = m - 1;  // symbols 1..lim lie strictly below m
  Rational total;
  const std::size_t upTo =
      lim >= probs_.size() ? probs_.size() : static_cast<std::size_t>(lim.get_ui());
  for (std::size_t j = 0; j < upTo; ++j) total += probs_[j];
  if (!geom_ || lim <= probs_.size()) return total;
  const mpz_class tcount = (lim - mpz_class(probs_.size())) / geom_->stride;
  if (tcount <= 0) return total;
  const Rational& r = geom_->ratio;
  total += probs_.back() * r * (Rational(1) - ratPow(r, tcount)) / (Rational(1) - r);
  return total;
}

Rational Column::maxProb() const {
  // Continuation probabilities are seed * r^j < seed, so the maximum is
  // always attained among the explicit entries.
  Rational best = probs_[0];
  for (const Rational& p : probs_)
    if (p > best) best = p;
  return best;
}

mpz_class Column::modalSymbol() const {
  std::size_t arg = 0;
  for (std::size_t j = 1; j < probs_.size(); ++j)
    if (probs_[j] > probs_[arg]) arg = j;
  return mpz_class(arg + 1);
}

bool Column::hasZeroEntry() const {
  if (!geom_) return true;
  if (geom_->stride >= 2) return true;
  for (const Rational& p : probs_)
    if (p.isZero()) return true;
  return false;
}

SymbolSet Column::support() const {
  std::vector<mpz_class> members;
  for (std::size_t j = 0; j < probs_.size(); ++j)
    if (!probs_[j].isZero()) members.push_back(mpz_class(j + 1));
  if (!geom_) {
    if (members.size() == probs_.size()) return SymbolSet::upTo(mpz_class(probs_.size()));
    return SymbolSet::finiteSet(std::move(members));
  }
  if (geom_->stride == 1) {
    std::vector<mpz_class> zeros;
    for (std::size_t j = 0; j < probs_.size(); ++j)
      if (probs_[j].isZero()) zeros.push_back(mpz_class(j + 1));
    if (zeros.empty()) return SymbolSet::all();
    return SymbolSet::complementList(std::move(zeros));
  }
  for (std::size_t i = 0; i + 1 < members.size(); ++i)
    if (members[i + 1] - members[i] != geom_->stride)
      throw std::domain_error(
          "column support mixes a stride continuation with misaligned "
          "explicit probabilities; not expressible as a symbol set");
  // The seed is positive, so members.back() == n and the progression extends it.
  return SymbolSet::progression(members.front(), geom_->stride);
}

mpz_class Column::sampleSymbol(const Rational& u) const {
  Rational cum;
  for (std::size_t j = 0; j < probs_.size(); ++j) {
    if (probs_[j].isZero()) continue;
    cum += probs_[j];
    if (u < cum) return mpz_class(j + 1);
  }
  if (!geom_) return mpz_class(probs_.size());  // unreachable for u in [0, 1)
  Rational step = probs_.back();
  mpz_class sym(probs_.size());
  for (;;) {
    step *= geom_->ratio;
    sym += geom_->stride;
    cum += step;
    if (u < cum) return sym;
  }
}

std::vector<std::pair<Rational, mpz_class>> Column::topSymbols(std::size_t count) const {
  std::vector<std::pair<Rational, mpz_class>> ex;
  for (std::size_t j = 0; j < probs_.size(); ++j)
    if (!probs_[j].isZero()) ex.emplace_back(probs_[j], mpz_class(j + 1));
  std::sort(ex.begin(), ex.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::vector<std::pair<Rational, mpz_class>> out;
  std::size_t i = 0;
  Rational tailP = geom_ ? probs_.back() * geom_->ratio : Rational(0);
  mpz_class tailSym = mpz_class(probs_.size()) + (geom_ ? geom_->stride : mpz_class(0));
  while (out.size() < count && (i < ex.size() || (geom_ && !tailP.isZero()))) {
    const bool takeTail = geom_ && (i >= ex.size() || tailP > ex[i].first);
    if (takeTail) {
      out.emplace_back(tailP, tailSym);
      tailP *= geom_->ratio;
      tailSym += geom_->stride;
    } else {
      out.push_back(ex[i]);
      ++i;
    }
  }
  return out;
}

SymbolMatrix::SymbolMatrix(std::vector<Column> explicitColumns, std::vector<Column> tailCycle)
    : explicit_(std::move(explicitColumns)), cycle_(std::move(tailCycle)) {
  if (cycle_.empty()) throw std::domain_error("matrix needs a nonempty tail cycle");
}

const Column& SymbolMatrix::column(std::size_t k) const {
  if (k == 0) throw std::domain_error("column index starts at 1");
  if (k <= explicit_.size()) return explicit_[k - 1];
  return cycle_[(k - explicit_.size() - 1) % cycle_.size()];
}

}  // namespace ostro
