#include "ostro/measure.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "ostro/cylinder.hpp"

namespace ostro {
namespace {

using u64 = std::uint64_t;

Rational floorZero(Rational r) { return r.isNegative() ? Rational(0) : std::move(r); }

Enclosure clampNonnegative(const Enclosure& e) {
  return Enclosure(floorZero(e.lo()), floorZero(e.hi()));
}

/// Fraction of a sigma-sum cylinder kept by the rank's rule.  Adaptive rule:
/// children c > sigma occupy exactly (sigma+1)/(2*sigma+1) of the parent.
Enclosure planFraction(const RankPlan& plan, const mpz_class& sigma) {
  if (plan.adaptive) return Enclosure(Rational(sigma + 1, 2 * sigma + 1));
  return plan.set.admissibleFraction(sigma);
}

/// Bounds valid for every state with sigma >= sigmaMin.
Enclosure planFractionRange(const RankPlan& plan, const mpz_class& sigmaMin) {
  if (plan.adaptive)
    return Enclosure(Rational(1, 2), Rational(sigmaMin + 1, 2 * sigmaMin + 1));
  return plan.set.admissibleFractionRange(sigmaMin);
}

mpz_class planMinChild(const RankPlan& plan, const mpz_class& sigmaMin) {
  return plan.adaptive ? mpz_class(sigmaMin + 1) : plan.set.minElement();
}

Rational unitMass(const mpz_class& c) { return Rational(mpz_class(1), mpz_class(c * (c + 1))); }

bool exactFractionKind(SymbolSet::Kind k) {
  using K = SymbolSet::Kind;
  return k == K::All || k == K::UpTo || k == K::TailFrom || k == K::FiniteSet ||
         k == K::ComplementList;
}

/// sum_{c > X} admissibleFraction(w, c) / (c (c+1)), closed form for the
/// kinds whose child fractions telescope.
std::optional<Rational> exactTailAggregate(const mpz_class& X, const SymbolSet& w) {
  using K = SymbolSet::Kind;
  switch (w.kind()) {
    case K::All:
      return Rational(mpz_class(1), mpz_class(X + 1));
    case K::TailFrom: {
      if (w.param() == 0) return Rational(mpz_class(1), mpz_class(X + 1));
      return tailProductSum(X, {mpz_class(0), mpz_class(w.param() + 1)});
    }
    case K::UpTo:
      return Rational(w.param()) *
             tailProductSum(X, {mpz_class(0), mpz_class(1), mpz_class(w.param() + 1)});
    case K::FiniteSet: {
      Rational total;
      for (const mpz_class& s : w.elements())
        total += tailProductSum(X, {mpz_class(0), s, mpz_class(s + 1)});
      return total;
    }
    case K::ComplementList: {
      Rational total(mpz_class(1), mpz_class(X + 1));
      for (const mpz_class& e : w.elements())
        total -= tailProductSum(X, {mpz_class(0), e, mpz_class(e + 1)});
      return total;
    }
    default:
      return std::nullopt;
  }
}

/// Mass that left tracking at rank 1 is a fully known set of states
/// {c in V_1 : c > N} with exact per-state masses 1/(c(c+1)), so its first
/// descent step can often be aggregated exactly instead of by ranges.
struct RootStepOut {
  Enclosure adm;
  Enclosure rem;
  mpz_class sigmaMin;
};

RootStepOut rootStep(const Enclosure& cutMass, const SymbolSet& v1, const mpz_class& N,
                     const RankPlan& plan2) {
  using K = SymbolSet::Kind;
  mpz_class X = N;  // the source states are exactly {c in v1 : c > X}
  if (v1.kind() == K::TailFrom && v1.param() > X) X = v1.param();

  std::optional<Enclosure> adm;
  if (!plan2.adaptive) {
    if (auto whole = exactTailAggregate(X, plan2.set)) {
      switch (v1.kind()) {
        case K::All:
        case K::TailFrom:
          adm = Enclosure(*whole);
          break;
        case K::UpTo: {
          auto beyond = exactTailAggregate(v1.param(), plan2.set);
          adm = Enclosure(*whole - *beyond);
          break;
        }
        case K::FiniteSet: {
          Enclosure total;
          for (const mpz_class& s : v1.elements())
            if (s > X) total += plan2.set.admissibleFraction(s).scale(unitMass(s));
          adm = total;
          break;
        }
        case K::ComplementList: {
          Enclosure total{Rational(*whole)};
          for (const mpz_class& e : v1.elements())
            if (e > X) total = total - plan2.set.admissibleFraction(e).scale(unitMass(e));
          adm = clampNonnegative(total);
          break;
        }
        default:
          break;
      }
    }
  }

  const mpz_class cMin = X + 1;
  RootStepOut out;
  out.sigmaMin = cMin + planMinChild(plan2, cMin);
  if (!adm) {
    const Enclosure fr = planFractionRange(plan2, cMin);
    out.adm = cutMass * fr;
    out.rem = clampNonnegative(
        cutMass * Enclosure(Rational(1) - fr.hi(), Rational(1) - fr.lo()));
    return out;
  }
  out.adm = *adm;
  out.rem = clampNonnegative(cutMass - *adm);
  return out;
}

/// Exact dynamic programming over (rank, sigma) states plus interval
/// bookkeeping for the mass outside the enumeration budget or sigma cap.
class LevelEngine {
 public:
  LevelEngine(const ConstraintFamily& fam, const MeasureOptions& opt)
      : fam_(fam), opt_(opt), cap_(opt.sigmaCap) {
    if (opt_.truncation == 0) throw std::domain_error("truncation must be at least 1");
    if (cap_ == 0) throw std::domain_error("sigma cap must be at least 1");
    mass_.assign(cap_ + 1, Rational());
    next_.assign(cap_ + 1, Rational());
    mass_[0] = Rational(1);
    trackedTotal_ = Rational(1);
  }

  LevelTable run(std::size_t maxDepth) {
    for (std::size_t level = 1; level <= maxDepth; ++level) step(level);
    return std::move(levels_);
  }

 private:
  struct Cut {
    Enclosure cur;        // surviving mass at the level just assembled
    mpz_class sigmaMin;   // every state in the cut has sigma >= sigmaMin
    bool rootExact = false;
    mpz_class rootN = 0;
    std::optional<SymbolSet> rootSet;
  };

  void step(std::size_t level) {
    const RankPlan plan = fam_.planAt(level);

    Enclosure admTotal;
    for (u64 s = lo_; s <= hi_; ++s) {
      if (mass_[s].isZero()) continue;
      admTotal += planFraction(plan, mpz_class(s)).scale(mass_[s]);
    }
    Enclosure removedTracked = clampNonnegative(Enclosure(trackedTotal_) - admTotal);

    Enclosure removedFromCuts;
    for (Cut& cut : cuts_) {
      if (cut.rootExact) {
        RootStepOut rs = rootStep(cut.cur, *cut.rootSet, cut.rootN, plan);
        removedFromCuts += rs.rem;
        cut.cur = rs.adm;
        cut.sigmaMin = rs.sigmaMin;
        cut.rootExact = false;
        cut.rootSet.reset();
      } else {
        const Enclosure fr = planFractionRange(plan, cut.sigmaMin);
        removedFromCuts +=
            cut.cur * Enclosure(Rational(1) - fr.hi(), Rational(1) - fr.lo());
        cut.cur = cut.cur * fr;
        cut.sigmaMin += planMinChild(plan, cut.sigmaMin);
      }
    }

    transition(plan);

    const Enclosure newCut = clampNonnegative(admTotal - Enclosure(nextTotal_));
    if (!newCut.hi().isZero()) {
      Cut cut;
      cut.cur = newCut;
      cut.sigmaMin = cutFloor_;
      if (level == 1 && !plan.adaptive && exactFractionKind(plan.set.kind())) {
        cut.rootExact = true;
        mpz_class n(static_cast<unsigned long>(cap_));
        if (auto last = plan.set.kthElement(opt_.truncation); last && *last < n) n = *last;
        cut.rootN = n;
        cut.rootSet = plan.set;
      }
      cuts_.push_back(std::move(cut));
    }

    Enclosure rawM{Rational(nextTotal_)};
    for (const Cut& cut : cuts_) rawM += cut.cur;
    const Enclosure rawR = removedTracked + removedFromCuts;

    // Both enclose the same true values, so each refines the other via
    // lambda(M_level) = lambda(M_{level-1}) - lambda(Mbar_level).
    const Enclosure m = Enclosure::intersect(rawM, clampNonnegative(prev_ - rawR));
    const Enclosure r = Enclosure::intersect(rawR, clampNonnegative(prev_ - m));
    levels_.m.push_back(m);
    levels_.removed.push_back(r);
    prev_ = m;

    mass_.swap(next_);
    trackedTotal_ = nextTotal_;
    lo_ = nextLo_;
    hi_ = nextHi_;
  }

  /// accum_[s'] += sum of w_ over the contiguous child range [clo, chi].
  void windowAccumulate(u64 clo, u64 chi) {
    if (clo > chi || clo > cap_) return;
    Rational rs;
    for (u64 sp = clo; sp <= cap_; ++sp) {
      const u64 in = sp - clo;
      if (in <= hi_ && !w_[in].isZero()) rs += w_[in];
      if (sp > chi) {
        const u64 out = sp - chi - 1;
        if (out <= hi_ && !w_[out].isZero()) rs -= w_[out];
      }
      if (!rs.isZero()) accum_[sp] += rs;
    }
  }

  /// accum_[s'] (+/-)= sum of w_ over sources s' - (start + j*stride),
  /// j = 0..count-1, via one running sum per residue class.
  void progressionAccumulate(const mpz_class& startZ, const mpz_class& strideZ, u64 count,
                             int sign) {
    if (count == 0 || startZ > cap_) return;
    const u64 start = startZ.get_ui();
    if (strideZ > cap_) {
      for (u64 s = lo_; s <= hi_ && s + start <= cap_; ++s) {
        if (mass_[s].isZero()) continue;
        if (sign > 0) accum_[s + start] += w_[s];
        else accum_[s + start] -= w_[s];
      }
      return;
    }
    const u64 stride = strideZ.get_ui();
    count = std::min<u64>(count, (cap_ - start) / stride + 1);
    std::vector<Rational> rs(stride);
    std::vector<u64> addPtr(stride), remPtr(stride);
    for (u64 r = 0; r < stride; ++r) addPtr[r] = remPtr[r] = r;
    for (u64 sp = start; sp <= cap_; ++sp) {
      const u64 base = sp - start;
      const u64 r = base % stride;
      while (addPtr[r] <= base) {
        if (addPtr[r] <= hi_ && !w_[addPtr[r]].isZero()) rs[r] += w_[addPtr[r]];
        addPtr[r] += stride;
      }
      if (base > (count - 1) * stride) {
        const u64 lowCut = base - (count - 1) * stride;
        while (remPtr[r] < lowCut) {
          if (remPtr[r] <= hi_ && !w_[remPtr[r]].isZero()) rs[r] -= w_[remPtr[r]];
          remPtr[r] += stride;
        }
      }
      if (!rs[r].isZero()) {
        if (sign > 0) accum_[sp] += rs[r];
        else accum_[sp] -= rs[r];
      }
    }
  }

  void transition(const RankPlan& plan) {
    w_.assign(cap_ + 1, Rational());
    accum_.assign(cap_ + 1, Rational());
    for (u64 s = lo_; s <= hi_; ++s)
      if (!mass_[s].isZero()) w_[s] = mass_[s] * Rational(mpz_class(s + 1));

    const u64 T = opt_.truncation;
    using K = SymbolSet::Kind;
    if (plan.adaptive) {
      // Children c in (s, s+T]: sources for s' span ceil((s'-T)/2) .. (s'-1)/2.
      Rational rs;
      u64 addPtr = 0, remPtr = 0;
      for (u64 sp = 1; sp <= cap_; ++sp) {
        const u64 hiSrc = (sp - 1) / 2;
        while (addPtr <= hiSrc) {
          if (addPtr <= hi_ && !w_[addPtr].isZero()) rs += w_[addPtr];
          ++addPtr;
        }
        if (sp > T) {
          const u64 loSrc = (sp - T + 1) / 2;
          while (remPtr < loSrc) {
            if (remPtr <= hi_ && !w_[remPtr].isZero()) rs -= w_[remPtr];
            ++remPtr;
          }
        }
        if (!rs.isZero()) accum_[sp] = rs;
      }
      cutFloor_ = std::min(mpz_class(2 * lo_ + T + 1), mpz_class(cap_ + 1));
    } else {
      const SymbolSet& v = plan.set;
      switch (v.kind()) {
        case K::All:
          windowAccumulate(1, std::min<u64>(T, cap_));
          break;
        case K::UpTo: {
          u64 chi = v.param() > cap_ ? cap_ : v.param().get_ui();
          windowAccumulate(1, std::min<u64>(chi, T));
          break;
        }
        case K::TailFrom: {
          if (v.param() < cap_) {
            const u64 lo = v.param().get_ui() + 1;
            const u64 width = T > cap_ ? cap_ : T;
            windowAccumulate(lo, std::min<u64>(lo + width - 1, cap_));
          }
          break;
        }
        case K::FiniteSet: {
          const auto& el = v.elements();
          const u64 limit = std::min<u64>(T, el.size());
          for (u64 i = 0; i < limit && el[i] <= cap_; ++i) {
            const u64 c = el[i].get_ui();
            for (u64 s = lo_; s <= hi_ && s + c <= cap_; ++s)
              if (!mass_[s].isZero()) accum_[s + c] += w_[s];
          }
          break;
        }
        case K::Progression:
          progressionAccumulate(v.param(), v.stride(), T, +1);
          break;
        case K::ComplementList: {
          const mpz_class cth = *v.kthElement(T);
          windowAccumulate(1, cth > cap_ ? cap_ : cth.get_ui());
          for (const mpz_class& eZ : v.elements()) {
            if (eZ > cth || eZ > cap_) continue;
            const u64 e = eZ.get_ui();
            for (u64 s = lo_; s <= hi_ && s + e <= cap_; ++s)
              if (!mass_[s].isZero()) accum_[s + e] -= w_[s];
          }
          break;
        }
        case K::ComplementArithmetic: {
          const mpz_class cth = *v.kthElement(T);
          windowAccumulate(1, cth > cap_ ? cap_ : cth.get_ui());
          if (v.param() <= cth) {
            mpz_class cnt = (cth - v.param()) / v.stride() + 1;
            progressionAccumulate(v.param(), v.stride(), cnt.get_ui(), -1);
          }
          break;
        }
      }
      cutFloor_ = mpz_class(cap_ + 1);
      if (auto c1 = plan.set.kthElement(opt_.truncation + 1)) {
        const mpz_class cand = mpz_class(lo_) + *c1;
        if (cand < cutFloor_) cutFloor_ = cand;
      }
    }

    nextTotal_ = Rational();
    nextLo_ = 0;
    nextHi_ = 0;
    bool any = false;
    next_[0] = Rational();
    for (u64 sp = 1; sp <= cap_; ++sp) {
      if (accum_[sp].isZero()) {
        next_[sp] = Rational();
        continue;
      }
      next_[sp] = accum_[sp] / Rational(mpz_class(mpz_class(sp) * (sp + 1)));
      nextTotal_ += next_[sp];
      if (!any) nextLo_ = sp;
      nextHi_ = sp;
      any = true;
    }
  }

  const ConstraintFamily& fam_;
  MeasureOptions opt_;
  u64 cap_;

  std::vector<Rational> mass_, next_, w_, accum_;
  Rational trackedTotal_, nextTotal_;
  u64 lo_ = 0, hi_ = 0, nextLo_ = 0, nextHi_ = 0;
  mpz_class cutFloor_;

  std::vector<Cut> cuts_;
  Enclosure prev_{Rational(1)};
  LevelTable levels_;
};

std::string levelLine(std::size_t k, const char* label, const Enclosure& e) {
  std::ostringstream os;
  os << label << " " << k << ": [" << e.lo().decimal(12) << ", " << e.hi().decimal(12) << "]";
  return os.str();
}

void appendLevelTrace(MeasureReport& rep) {
  for (std::size_t k = 0; k < rep.levelMeasures.size(); ++k)
    rep.trace.push_back(levelLine(k + 1, "level", rep.levelMeasures[k]));
  for (std::size_t j = 0; j < rep.removedLayers.size(); ++j)
    rep.trace.push_back(levelLine(j + 1, "removed layer", rep.removedLayers[j]));
  Rational ratioSum;
  bool have = false;
  for (std::size_t k = 1; k < rep.removedLayers.size(); ++k) {
    const Rational& denom = rep.levelMeasures[k - 1].hi();
    if (denom.isZero()) continue;
    ratioSum += rep.removedLayers[k].lo() / denom;
    have = true;
  }
  if (have)
    rep.trace.push_back("partial sum of removal ratios (lower bounds): >= " +
                        ratioSum.decimal(12));
}

void fillLevels(MeasureReport& rep, const ConstraintFamily& f, std::size_t maxDepth,
                const MeasureOptions& opt) {
  rep.depth = maxDepth;
  LevelTable lt = measureLevels(f, maxDepth, opt);
  rep.levelMeasures = std::move(lt.m);
  rep.removedLayers = std::move(lt.removed);
  rep.mkEnclosure =
      rep.levelMeasures.empty() ? Enclosure(Rational(1)) : rep.levelMeasures.back();
  appendLevelTrace(rep);
}

bool tailIsRepeating(const TailRule& t) {
  return t.kind == TailRule::Kind::ConstantSet || t.kind == TailRule::Kind::CyclicSets;
}

bool allRanksUpTo(const ConstraintFamily& f) {
  for (const SymbolSet& s : f.explicitRules())
    if (s.kind() != SymbolSet::Kind::UpTo) return false;
  if (!tailIsRepeating(f.tail())) return false;
  for (const SymbolSet& s : f.tail().sets)
    if (s.kind() != SymbolSet::Kind::UpTo) return false;
  return true;
}

/// For sets missing infinitely many symbols with bounded gaps, the excluded
/// sequence starts at a1 and has consecutive gaps <= d.
std::optional<std::pair<mpz_class, mpz_class>> gapExclusionParams(const SymbolSet& s) {
  using K = SymbolSet::Kind;
  if (s.kind() == K::ComplementArithmetic) return {{s.param(), s.stride()}};
  if (s.kind() == K::Progression && s.stride() >= 2) {
    // Kept symbols are isolated, so the excluded integers have gaps <= 2 and
    // begin at 1, or at 2 when the progression starts at 1.
    return {{mpz_class(s.param() == 1 ? 2 : 1), mpz_class(2)}};
  }
  return std::nullopt;
}

bool allRanksFinite(const ConstraintFamily& f) {
  for (const SymbolSet& s : f.explicitRules())
    if (!s.isFinite()) return false;
  if (!tailIsRepeating(f.tail())) return false;
  for (const SymbolSet& s : f.tail().sets)
    if (!s.isFinite()) return false;
  return true;
}

mpz_class setCount(const SymbolSet& s) {
  if (s.kind() == SymbolSet::Kind::UpTo) return s.param();
  return mpz_class(s.elements().size());
}

/// Lower bound for the constant threshold family V = {m+1, m+2, ...}:
/// lambda(M_1) = 1/(m+1) exactly, lambda(Mbar_2) = m * sum_{c>m} 1/(c(c+1)(c+m+1))
/// exactly, and the removed layers at least halve at every later rank, so
/// lambda >= 1/(m+1) - 2*lambda(Mbar_2).
Rational constantThresholdBound(const mpz_class& m) {
  if (m == 0) return Rational(1);
  const Rational firstLayer =
      Rational(m) * tailProductSum(m, {mpz_class(0), mpz_class(1), mpz_class(m + 1)});
  return Rational(mpz_class(1), mpz_class(m + 1)) - Rational(2) * firstLayer;
}

std::optional<mpz_class> thresholdAt(const ConstraintFamily& f, std::size_t rank) {
  const RankPlan p = f.planAt(rank);
  if (p.adaptive) return std::nullopt;
  if (p.set.kind() == SymbolSet::Kind::All) return mpz_class(0);
  if (p.set.kind() == SymbolSet::Kind::TailFrom) return p.set.param();
  return std::nullopt;
}

void concludeConstantWitness(MeasureReport& rep, const mpz_class& d0, bool pureConstant) {
  Rational bound = constantThresholdBound(d0);
  const Rational squared =
      d0 == 0 ? Rational(1)
              : Rational(mpz_class(1), mpz_class((d0 + 1) * (d0 + 1)));
  rep.verdict = Verdict::PositiveCertified;
  if (pureConstant) {
    rep.theorem = "constant-tail-bound";
    rep.trace.push_back("constant threshold m = " + d0.get_str() +
                        ": lambda(M_1) = 1/(m+1) and the removed layers at "
                        "least halve per rank, so lambda >= lambda(M_1) - "
                        "2*lambda(Mbar_2) = " + bound.str());
  } else {
    rep.theorem = "constant-subset-witness";
    rep.trace.push_back("thresholds are bounded by D0 = " + d0.get_str() +
                        "; the constant family {D0+1, D0+2, ...} is contained "
                        "in every rank's set and carries measure >= " + bound.str());
  }
  if (bound < squared) bound = squared;
  rep.trace.push_back("squared-threshold floor 1/(m+1)^2 = " + squared.str() +
                      "; certified lower bound " + bound.str() + " ~= " +
                      bound.decimal(12));
  rep.lowerBound = bound;
}

}  // namespace

LevelTable measureLevels(const ConstraintFamily& f, std::size_t maxDepth,
                         const MeasureOptions& opt) {
  if (maxDepth == 0) throw std::domain_error("depth must be at least 1");
  if (opt.truncation == 0 || opt.sigmaCap < 2)
    throw std::domain_error("degenerate enumeration budget");
  LevelEngine engine(f, opt);
  return engine.run(maxDepth);
}

Enclosure admissibleMeasure(const ConstraintFamily& f, std::size_t depth,
                            const MeasureOptions& opt) {
  if (depth == 0) throw std::domain_error("depth must be at least 1");
  return measureLevels(f, depth, opt).m.back();
}

Enclosure removedLayerMeasure(const ConstraintFamily& f, std::size_t depth,
                              const MeasureOptions& opt) {
  return measureLevels(f, depth + 1, opt).removed.back();
}

MeasureReport zeroMeasureCertificate(const ConstraintFamily& f, std::size_t maxDepth,
                                     const MeasureOptions& opt) {
  MeasureReport rep;
  fillLevels(rep, f, maxDepth, opt);

  if (f.hasAdaptiveTail()) {
    rep.verdict = Verdict::ZeroCertified;
    rep.theorem = "dominated-symbol-growth";
    rep.trace.push_back(
        "each adaptive rank keeps at most (sigma+1)/(2*sigma+1) <= 2/3 of the "
        "surviving mass once sigma >= 1, so the level measures decay "
        "geometrically to 0");
    return rep;
  }

  if (allRanksUpTo(f)) {
    rep.verdict = Verdict::ZeroCertified;
    rep.theorem = "harmonic-reciprocal-divergence";
    rep.trace.push_back(
        "every rank admits only {1..m_k}; each admissible cylinder loses more "
        "than the fraction 1/(m_k+1) of its mass at the next rank, and the "
        "finitely many m_k repeat forever, so the removal ratios have a "
        "divergent sum");
    for (const SymbolSet& s : f.tail().sets)
      rep.trace.push_back("repeating bound m = " + s.param().get_str() +
                          " gives removal ratio > 1/" + mpz_class(s.param() + 1).get_str());
    return rep;
  }

  if (tailIsRepeating(f.tail())) {
    bool allGap = true;
    std::optional<Rational> minorant;
    for (const SymbolSet& s : f.tail().sets) {
      const auto params = gapExclusionParams(s);
      if (!params) {
        allGap = false;
        break;
      }
      const Rational ratio(mpz_class(1), mpz_class(params->first * params->second));
      if (!minorant || ratio < *minorant) minorant = ratio;
    }
    if (allGap) {
      rep.verdict = Verdict::ZeroCertified;
      rep.theorem = "bounded-gap-exclusions";
      rep.trace.push_back(
          "every tail rank excludes an increasing symbol sequence with bounded "
          "gaps; each admissible cylinder loses more than the fraction "
          "1/(a_1*d) of its mass per rank, a divergent removal-ratio sum");
      rep.trace.push_back("removal ratio minorant 1/(a_1*d) = " + minorant->str());
      return rep;
    }
  }

  if (allRanksFinite(f)) {
    mpz_class worst(0);
    for (const SymbolSet& s : f.explicitRules()) worst = std::max(worst, setCount(s));
    for (const SymbolSet& s : f.tail().sets) worst = std::max(worst, setCount(s));
    rep.verdict = Verdict::ZeroCertified;
    rep.theorem = "bounded-symbol-count";
    rep.trace.push_back(
        "every rank admits at most N = " + worst.get_str() +
        " symbols, so lambda(M_k) <= N^k/(k+1)! which tends to 0");
    return rep;
  }

  rep.trace.push_back(
      "no divergence criterion matched; computed level enclosures alone never "
      "certify a zero limit");
  return rep;
}

MeasureReport positiveMeasureCertificate(const ConstraintFamily& f, std::size_t maxDepth,
                                         const MeasureOptions& opt) {
  MeasureReport rep;
  fillLevels(rep, f, maxDepth, opt);

  if (f.hasAdaptiveTail()) {
    rep.trace.push_back("adaptive families concentrate on a measure-zero set; "
                        "no positive lower bound exists");
    return rep;
  }
  for (std::size_t k = 1; k <= f.horizon(); ++k) {
    if (!thresholdAt(f, k)) {
      rep.trace.push_back("rank " + std::to_string(k) +
                          " is not a threshold set {v+1, v+2, ...}; the "
                          "certificate requires threshold shape at every rank");
      return rep;
    }
  }
  const TailRule& tail = f.tail();

  // Bounded thresholds: a constant-threshold family is a subset witness.
  if (tailIsRepeating(tail) ||
      (tail.kind == TailRule::Kind::TailFromGeometric && tail.geomRatio == 1)) {
    mpz_class d0(0);
    bool shapeOk = true;
    if (tail.kind == TailRule::Kind::TailFromGeometric) {
      d0 = tail.geomBase;
    } else {
      for (const SymbolSet& s : tail.sets) {
        const bool threshold = s.kind() == SymbolSet::Kind::TailFrom ||
                               s.kind() == SymbolSet::Kind::All;
        if (!threshold) {
          shapeOk = false;
          break;
        }
        if (s.kind() == SymbolSet::Kind::TailFrom) d0 = std::max(d0, s.param());
      }
    }
    if (!shapeOk) {
      rep.trace.push_back("tail sets are not threshold sets; no certificate shape matched");
      return rep;
    }
    bool pureConstant = f.horizon() == 0 && tail.kind == TailRule::Kind::ConstantSet;
    if (tail.kind == TailRule::Kind::TailFromGeometric) pureConstant = f.horizon() == 0;
    for (std::size_t k = 1; k <= f.horizon(); ++k) {
      const mpz_class v = *thresholdAt(f, k);
      if (v != d0) pureConstant = false;
      d0 = std::max(d0, v);
    }
    concludeConstantWitness(rep, d0, pureConstant);
    return rep;
  }

  if (tail.kind == TailRule::Kind::TailFromGeometric) {
    rep.trace.push_back("threshold ratio v_{k+1}/v_k equals " + tail.geomRatio.get_str() +
                        " >= 2, outside the geometric-removal hypothesis");
    return rep;
  }

  if (tail.kind != TailRule::Kind::TailFromPolynomial) {
    rep.trace.push_back("tail rule is outside every positive-certificate shape");
    return rep;
  }

  // Polynomial thresholds v_k = P(k).
  const auto& coeffs = tail.polyCoeffs;
  std::size_t deg = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] < 0) {
      rep.trace.push_back("polynomial threshold has a negative coefficient; the "
                          "monotone ratio bound does not apply");
      return rep;
    }
    if (coeffs[i] != 0) deg = i;
  }
  if (deg == 0) {
    mpz_class d0 = coeffs.empty() ? mpz_class(0) : coeffs[0];
    bool pureConstant = f.horizon() == 0;
    for (std::size_t k = 1; k <= f.horizon(); ++k) {
      const mpz_class v = *thresholdAt(f, k);
      if (v != d0) pureConstant = false;
      d0 = std::max(d0, v);
    }
    concludeConstantWitness(rep, d0, pureConstant);
    return rep;
  }

  // P(k+1)/P(k) <= ((k+1)/k)^deg for nonnegative coefficients, and that bound
  // decreases, so C0 = ((k0+2)/(k0+1))^deg covers every rank beyond k0.
  std::size_t k0 = std::max<std::size_t>(f.horizon(), 1);
  Rational c0;
  for (;; ++k0) {
    mpz_class numPow, denPow;
    mpz_pow_ui(numPow.get_mpz_t(), mpz_class(k0 + 2).get_mpz_t(), deg);
    mpz_pow_ui(denPow.get_mpz_t(), mpz_class(k0 + 1).get_mpz_t(), deg);
    c0 = Rational(numPow, denPow);
    if (c0 < Rational(2)) break;
  }

  const std::size_t n = k0 + 1;
  std::vector<mpz_class> base;
  mpz_class sigma(0);
  for (std::size_t i = 1; i <= n; ++i) {
    const mpz_class ci = *thresholdAt(f, i) + 1;
    base.push_back(ci);
    sigma += ci;
  }
  const mpz_class vNext = *thresholdAt(f, n + 1);
  const mpz_class vAfter = *thresholdAt(f, n + 2);

  // The removed-layer series inside the witness cylinder is dominated by the
  // geometric ratio C0/2, so the kept fraction is at least
  // 1 - (2/(2-C0)) * vAfter/(sigma_{n+1} + vAfter + 1), positive once
  // sigma_{n+1} > vAfter*C0/(2-C0) - 1.
  const Rational threshold = Rational(vAfter) * c0 / (Rational(2) - c0) - Rational(1);
  mpz_class cWitness = vNext + 1;
  const Rational slack = threshold - Rational(sigma);
  if (!slack.isNegative()) {
    mpz_class floorTh;
    mpz_fdiv_q(floorTh.get_mpz_t(), slack.num().get_mpz_t(), slack.den().get_mpz_t());
    cWitness = std::max(cWitness, mpz_class(floorTh + 1));
  }
  if (cWitness - (vNext + 1) > mpz_class(static_cast<unsigned long>(opt.searchLimit))) {
    rep.trace.push_back("witness symbol exceeds the search limit; raise "
                        "searchLimit to certify this family");
    return rep;
  }
  base.push_back(cWitness);
  const mpz_class sigmaN1 = sigma + cWitness;
  const Rational kept =
      Rational(1) - (Rational(2) / (Rational(2) - c0)) *
                        Rational(vAfter, sigmaN1 + vAfter + 1);
  const Cylinder witness(base);
  const Rational bound = witness.length() * kept;

  rep.verdict = Verdict::PositiveCertified;
  rep.theorem = "tail-ratio-witness";
  rep.lowerBound = bound;
  {
    std::ostringstream os;
    os << "threshold ratio bound C0 = " << c0.str() << " < 2 beyond rank " << k0;
    rep.trace.push_back(os.str());
    std::ostringstream os2;
    os2 << "witness cylinder symbols (";
    for (std::size_t i = 0; i < base.size(); ++i)
      os2 << (i ? "," : "") << base[i].get_str();
    os2 << ") keep at least the fraction " << kept.str() << " of their length";
    rep.trace.push_back(os2.str());
    rep.trace.push_back("certified lower bound " + bound.str() + " ~= " +
                        bound.decimal(18));
  }
  return rep;
}

std::vector<Enclosure> aSigmaLayers(std::size_t maxDepth, const MeasureOptions& opt) {
  return measureLevels(ConstraintFamily::adaptiveSigma(), maxDepth, opt).m;
}

MeasureReport boundedSymbolSetReport(const mpz_class& m, std::size_t maxDepth,
                                     const MeasureOptions& opt) {
  if (m < 1) throw std::domain_error("symbol bound must be at least 1");
  MeasureReport rep =
      zeroMeasureCertificate(ConstraintFamily::constant(SymbolSet::upTo(m)), maxDepth, opt);
  rep.trace.push_back(
      "the certificate holds for every bound m, and numbers with any bounded "
      "symbol sequence form a countable union of these zero-measure sets, so "
      "that union is also null");
  return rep;
}

}  // namespace ostro
