#include "ostro/symbol_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace ostro {

namespace {

/// f_c(sigma + 1): fraction of a sum-sigma cylinder held by the child c.
Rational childFraction(const mpz_class& sigma, const mpz_class& c) {
  const mpz_class a = sigma + 1;
  return Rational(a, (a + c - 1) * (a + c));
}

/// Largest value of f_c over all sigma >= sigmaMin.  f_c(a) peaks at
/// a in {c-1, c} with value 1/(2(2c-1)) and decreases beyond the peak.
Rational childFractionSup(const mpz_class& sigmaMin, const mpz_class& c) {
  if (sigmaMin + 1 >= c) return childFraction(sigmaMin, c);
  return Rational(1, 2 * (2 * c - 1));
}

}  // namespace

Rational tailProductSum(const mpz_class& N, const std::vector<mpz_class>& shifts) {
  if (N < 0) throw std::domain_error("tail start below 0");
  if (shifts.size() < 2) throw std::domain_error("tail sum needs degree >= 2");
  std::vector<mpz_class> A = shifts;
  std::sort(A.begin(), A.end());
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (A[i] < 0) throw std::domain_error("negative shift");
    if (i && A[i] == A[i - 1]) throw std::domain_error("repeated shift");
  }
  // Partial fractions: 1/prod(c + A_i) = sum_i w_i/(c + A_i) with
  // w_i = prod_{j != i} 1/(A_j - A_i) and sum_i w_i = 0, so the divergent
  // harmonic parts cancel and the tail reduces to finite harmonic runs:
  //   sum_{c > N} = sum_i w_i * (H_{N + A_max} - H_{N + A_i}).
  const mpz_class& Amax = A.back();
  Rational total(0);
  for (std::size_t i = 0; i < A.size(); ++i) {
    mpz_class denom = 1;
    for (std::size_t j = 0; j < A.size(); ++j)
      if (j != i) denom *= A[j] - A[i];
    Rational run(0);
    for (mpz_class t = N + A[i] + 1; t <= N + Amax; ++t) run += Rational(1, t);
    total += run / Rational(denom);
  }
  return total;
}

Enclosure progressionTailSum(const mpz_class& c0, const mpz_class& d,
                             const std::vector<mpz_class>& shifts) {
  if (c0 < 1 || d < 1) throw std::domain_error("bad progression parameters");
  const auto term = [&](const mpz_class& c) {
    mpz_class prod = 1;
    for (const mpz_class& a : shifts) prod *= c + a;
    return Rational(1, prod);
  };
  if (d == 1) {
    const Rational exact = tailProductSum(c0 - 1, shifts);
    return Enclosure(exact, exact);
  }
  // Terms decrease, so a stride-d subsample is sandwiched by scaled full
  // tails: (1/d) sum_{c >= cJ} <= sum_{j >= J} <= term(cJ) + (1/d) sum_{c > cJ}.
  // The sandwich gap is (1 - 1/d) term(cJ), so summing the prefix exactly out
  // to a fixed horizon makes the enclosure quadratically tight for small c0.
  constexpr unsigned long kExactHorizon = 256;
  Rational prefix;
  mpz_class cJ = c0;
  while (cJ < kExactHorizon) {
    prefix += term(cJ);
    cJ += d;
  }
  const Rational lo = prefix + tailProductSum(cJ - 1, shifts) / Rational(d);
  const Rational hi = prefix + term(cJ) + tailProductSum(cJ, shifts) / Rational(d);
  return Enclosure(lo, hi);
}

SymbolSet SymbolSet::all() { return SymbolSet(Kind::All, {}, 0, 0); }

SymbolSet SymbolSet::finiteSet(std::vector<mpz_class> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty()) throw std::domain_error("empty symbol set");
  if (elements.front() < 1) throw std::domain_error("symbol below 1");
  return SymbolSet(Kind::FiniteSet, std::move(elements), 0, 0);
}

SymbolSet SymbolSet::upTo(const mpz_class& m) {
  if (m < 1) throw std::domain_error("upTo bound below 1");
  return SymbolSet(Kind::UpTo, {}, m, 0);
}

SymbolSet SymbolSet::tailFrom(const mpz_class& v) {
  if (v < 0) throw std::domain_error("negative tail threshold");
  return SymbolSet(Kind::TailFrom, {}, v, 0);
}

SymbolSet SymbolSet::progression(const mpz_class& start, const mpz_class& stride) {
  if (start < 1 || stride < 1) throw std::domain_error("bad progression");
  return SymbolSet(Kind::Progression, {}, start, stride);
}

SymbolSet SymbolSet::complementList(std::vector<mpz_class> excluded) {
  std::sort(excluded.begin(), excluded.end());
  excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());
  if (!excluded.empty() && excluded.front() < 1) throw std::domain_error("symbol below 1");
  return SymbolSet(Kind::ComplementList, std::move(excluded), 0, 0);
}

SymbolSet SymbolSet::complementArithmetic(const mpz_class& a1, const mpz_class& d) {
  if (a1 < 1 || d < 1) throw std::domain_error("bad exclusion sequence");
  if (a1 == 1 && d == 1) throw std::domain_error("empty symbol set");
  return SymbolSet(Kind::ComplementArithmetic, {}, a1, d);
}

bool SymbolSet::contains(const mpz_class& c) const {
  if (c < 1) return false;
  switch (kind_) {
    case Kind::All:
      return true;
    case Kind::FiniteSet:
      return std::binary_search(elems_.begin(), elems_.end(), c);
    case Kind::UpTo:
      return c <= p_;
    case Kind::TailFrom:
      return c > p_;
    case Kind::Progression:
      return c >= p_ && (c - p_) % d_ == 0;
    case Kind::ComplementList:
      return !std::binary_search(elems_.begin(), elems_.end(), c);
    case Kind::ComplementArithmetic:
      return !(c >= p_ && (c - p_) % d_ == 0);
  }
  return false;
}

bool SymbolSet::isFinite() const {
  return kind_ == Kind::FiniteSet || kind_ == Kind::UpTo;
}

mpz_class SymbolSet::minElement() const {
  switch (kind_) {
    case Kind::All:
    case Kind::UpTo:
      return 1;
    case Kind::FiniteSet:
      return elems_.front();
    case Kind::TailFrom:
      return p_ + 1;
    case Kind::Progression:
      return p_;
    case Kind::ComplementList:
    case Kind::ComplementArithmetic: {
      mpz_class c = 1;
      while (!contains(c)) ++c;
      return c;
    }
  }
  return 1;
}

std::optional<mpz_class> SymbolSet::maxElement() const {
  if (kind_ == Kind::FiniteSet) return elems_.back();
  if (kind_ == Kind::UpTo) return p_;
  return std::nullopt;
}

std::optional<mpz_class> SymbolSet::kthElement(std::uint64_t t) const {
  if (t == 0) throw std::domain_error("element index below 1");
  switch (kind_) {
    case Kind::All:
      return mpz_class(static_cast<unsigned long>(t));
    case Kind::FiniteSet:
      if (t > elems_.size()) return std::nullopt;
      return elems_[t - 1];
    case Kind::UpTo:
      if (mpz_class(static_cast<unsigned long>(t)) > p_) return std::nullopt;
      return mpz_class(static_cast<unsigned long>(t));
    case Kind::TailFrom:
      return p_ + static_cast<unsigned long>(t);
    case Kind::Progression:
      return p_ + d_ * static_cast<unsigned long>(t - 1);
    case Kind::ComplementList: {
      // t-th positive integer outside the exclusion list: each exclusion at
      // or below the running candidate shifts it up by one (list is sorted).
      mpz_class c = static_cast<unsigned long>(t);
      for (const mpz_class& e : elems_)
        if (e <= c) ++c;
      return c;
    }
    case Kind::ComplementArithmetic: {
      // Count admissible values <= x: x - (number of excluded <= x).
      const auto admissibleUpTo = [&](const mpz_class& x) {
        if (x < p_) return mpz_class(x);
        return mpz_class(x - ((x - p_) / d_ + 1));
      };
      // Smallest x with admissibleUpTo(x) >= t; the count steps up exactly
      // at admissible values, so that x is itself admissible.
      mpz_class lo = 1, hi = 2 * static_cast<unsigned long>(t) + p_ + d_;
      while (lo < hi) {
        mpz_class mid = (lo + hi) / 2;
        if (admissibleUpTo(mid) >= static_cast<unsigned long>(t))
          hi = mid;
        else
          lo = mid + 1;
      }
      return lo;
    }
  }
  return std::nullopt;
}

Enclosure SymbolSet::admissibleFraction(const mpz_class& sigma) const {
  const Rational one(1);
  switch (kind_) {
    case Kind::All:
      return Enclosure(one);
    case Kind::UpTo:
      // Telescoping run c = 1..m.
      return Enclosure(Rational(p_, sigma + p_ + 1));
    case Kind::TailFrom:
      // Telescoping tail c > v.
      return Enclosure(Rational(sigma + 1, sigma + p_ + 1));
    case Kind::FiniteSet: {
      Rational s(0);
      for (const mpz_class& c : elems_) s += childFraction(sigma, c);
      return Enclosure(s);
    }
    case Kind::ComplementList: {
      Rational s(0);
      for (const mpz_class& c : elems_) s += childFraction(sigma, c);
      return Enclosure(one - s);
    }
    case Kind::Progression: {
      const Enclosure t = progressionTailSum(sigma + p_, d_, {0, 1});
      return t.scale(Rational(mpz_class(sigma + 1)));
    }
    case Kind::ComplementArithmetic: {
      const Enclosure t = progressionTailSum(sigma + p_, d_, {0, 1});
      const Enclosure removed = t.scale(Rational(mpz_class(sigma + 1)));
      return Enclosure(one, one) - removed;
    }
  }
  return Enclosure(one);
}

Enclosure SymbolSet::admissibleFractionRange(const mpz_class& sigmaMin) const {
  const Rational zero(0), one(1);
  switch (kind_) {
    case Kind::All:
      return Enclosure(one);
    case Kind::UpTo:
      // m/(sigma+m+1) decreases in sigma.
      return Enclosure(zero, Rational(p_, sigmaMin + p_ + 1));
    case Kind::TailFrom:
      // (sigma+1)/(sigma+v+1) increases toward 1.
      return Enclosure(Rational(sigmaMin + 1, sigmaMin + p_ + 1), one);
    case Kind::FiniteSet: {
      Rational hi(0);
      for (const mpz_class& c : elems_) hi += childFractionSup(sigmaMin, c);
      return Enclosure(zero, std::min(hi, one));
    }
    case Kind::ComplementList: {
      Rational removedHi(0);
      for (const mpz_class& c : elems_) removedHi += childFractionSup(sigmaMin, c);
      return Enclosure(std::max(zero, one - removedHi), one);
    }
    case Kind::Progression:
    case Kind::ComplementArithmetic:
      return Enclosure(zero, one);
  }
  return Enclosure(zero, one);
}

std::string SymbolSet::describe() const {
  switch (kind_) {
    case Kind::All:
      return "all";
    case Kind::FiniteSet: {
      std::string s = "finite:";
      for (std::size_t i = 0; i < elems_.size(); ++i)
        s += (i ? "," : "") + elems_[i].get_str();
      return s;
    }
    case Kind::UpTo:
      return "upto:" + p_.get_str();
    case Kind::TailFrom:
      return "tail:" + p_.get_str();
    case Kind::Progression:
      return "progression:" + p_.get_str() + "," + d_.get_str();
    case Kind::ComplementList: {
      std::string s = "complement:";
      for (std::size_t i = 0; i < elems_.size(); ++i)
        s += (i ? "," : "") + elems_[i].get_str();
      return s;
    }
    case Kind::ComplementArithmetic:
      return "complement:" + p_.get_str() + "," + mpz_class(p_ + d_).get_str() + "," +
             mpz_class(p_ + 2 * d_).get_str() + ",...";
  }
  return "";
}

}  // namespace ostro
