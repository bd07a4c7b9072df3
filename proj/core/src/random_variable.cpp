#include "ostro/random_variable.hpp"

#include <queue>
#include <stdexcept>
#include <utility>

#include "ostro/cylinder.hpp"
#include "ostro/expansion.hpp"

namespace ostro {
namespace {

const mpz_class& twoPow64() {
  static const mpz_class v = mpz_class(1) << 64;
  return v;
}

}  // namespace

Rational cdf(const SymbolMatrix& P, const Rational& x) {
  if (x <= Rational(0)) return Rational(0);
  if (x >= Rational(1)) return Rational(1);
  const O1Expansion e = expand(x, std::size_t{1} << 20);
  if (!e.exhausted()) throw std::domain_error("expansion too long for exact cdf");
  const auto& g = e.g();

  // F = sum_k (-1)^{k-1} * P(symbol_k >= g_k) * prod_{i<k} P(symbol_i = g_i):
  // the alternation mirrors the expansion's orientation flips (larger first
  // symbol means smaller value, larger second symbol larger value, ...).
  Rational f;
  Rational prefixProb(1);
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Column& col = P.column(k + 1);
    const Rational beta = Rational(1) - col.cdfBelow(g[k]);
    if (k % 2 == 0)
      f += beta * prefixProb;
    else
      f -= beta * prefixProb;
    if (k + 1 < g.size()) {
      prefixProb *= col.prob(g[k]);
      if (prefixProb.isZero()) break;
    }
  }
  return f;
}

Rational cylinderProbability(const SymbolMatrix& P, const std::vector<mpz_class>& base) {
  Rational p(1);
  for (std::size_t k = 0; k < base.size(); ++k) {
    if (base[k] < 1) throw std::domain_error("cylinder symbols must be >= 1");
    p *= P.column(k + 1).prob(base[k]);
    if (p.isZero()) break;
  }
  return p;
}

const Rational& Sampler::defaultError() {
  static const Rational eps(mpz_class(1), mpz_class(mpz_class(1) << 60));
  return eps;
}

SamplePoint Sampler::sample(const Rational& maxError) {
  if (!(Rational(0) < maxError)) throw std::domain_error("error bound must be positive");
  std::vector<mpz_class> prefix;
  mpz_class sigma(0), denomProduct(1);
  for (std::size_t k = 1;; ++k) {
    const Rational u(mpz_class(rng_.next()), twoPow64());
    const mpz_class g = matrix_->column(k).sampleSymbol(u);
    prefix.push_back(g);
    sigma += g;
    denomProduct *= sigma;
    const Rational len(mpz_class(1), mpz_class(denomProduct * (sigma + 1)));
    if (len <= Rational(2) * maxError) {
      const Cylinder cyl(prefix);
      const auto [a, b] = cyl.endpoints();
      SamplePoint out;
      out.value = (a + b) / Rational(2);
      out.errorBound = len / Rational(2);
      out.prefix = std::move(prefix);
      return out;
    }
  }
}

Classification classify(const SymbolMatrix& P, std::size_t certDepth,
                        const MeasureOptions& opt) {
  Classification out;
  bool discrete = true;
  for (const Column& c : P.tailCycle())
    if (c.maxProb() != Rational(1)) {
      discrete = false;
      break;
    }
  if (discrete) {
    out.kind = DistributionKind::Discrete;
    out.detail = ContinuousDetail::NotApplicable;
    out.evidence =
        "every tail column concentrates all mass on one symbol, so the modal "
        "product stays positive";
    return out;
  }
  out.kind = DistributionKind::Continuous;
  try {
    const MeasureReport rep = zeroMeasureCertificate(supportFamily(P), certDepth, opt);
    if (rep.verdict == Verdict::ZeroCertified) {
      out.detail = ContinuousDetail::CantorTypeSingular;
      out.evidence = "support carries Lebesgue measure zero (" + rep.theorem + ")";
    } else {
      out.detail = ContinuousDetail::Unresolved;
      out.evidence = "no zero-measure criterion matched the support family";
    }
  } catch (const std::domain_error&) {
    out.detail = ContinuousDetail::Unresolved;
    out.evidence = "support set not expressible in closed form";
  }
  return out;
}

std::vector<mpz_class> modalPrefix(const SymbolMatrix& P, std::size_t len) {
  std::vector<mpz_class> out;
  out.reserve(len);
  for (std::size_t k = 1; k <= len; ++k) out.push_back(P.column(k).modalSymbol());
  return out;
}

namespace {

struct AtomNode {
  Rational prob;
  std::vector<std::size_t> idx;  // per-column position in the candidate list
  std::size_t lastBumped = 0;
};

struct AtomNodeWorse {
  // priority_queue surfaces the "largest" node: higher probability first,
  // then the lexicographically smaller index tuple.
  bool operator()(const AtomNode& a, const AtomNode& b) const {
    if (a.prob != b.prob) return a.prob < b.prob;
    return b.idx < a.idx;
  }
};

}  // namespace

std::vector<Atom> atoms(const SymbolMatrix& P, std::size_t budget) {
  for (const Column& c : P.tailCycle())
    if (c.maxProb() != Rational(1))
      throw std::logic_error("atoms requested for a continuous distribution");
  std::vector<Atom> out;
  if (budget == 0) return out;

  const auto& cols = P.explicitColumns();
  std::vector<std::vector<std::pair<Rational, mpz_class>>> cand;
  cand.reserve(cols.size());
  for (const Column& c : cols) cand.push_back(c.topSymbols(budget));

  AtomNode root;
  root.prob = Rational(1);
  root.idx.assign(cols.size(), 0);
  for (const auto& list : cand) root.prob *= list[0].first;

  // Best-first walk of the product order; bumping only coordinates at or
  // after the last bumped one reaches every index tuple exactly once.
  std::priority_queue<AtomNode, std::vector<AtomNode>, AtomNodeWorse> heap;
  heap.push(std::move(root));
  while (!heap.empty() && out.size() < budget) {
    const AtomNode node = heap.top();
    heap.pop();
    Atom a;
    a.probability = node.prob;
    a.prefix.reserve(node.idx.size());
    for (std::size_t i = 0; i < node.idx.size(); ++i)
      a.prefix.push_back(cand[i][node.idx[i]].second);
    out.push_back(std::move(a));
    for (std::size_t i = node.lastBumped; i < node.idx.size(); ++i) {
      if (node.idx[i] + 1 >= cand[i].size()) continue;
      AtomNode child = node;
      child.idx[i] += 1;
      child.lastBumped = i;
      child.prob = node.prob / cand[i][node.idx[i]].first * cand[i][node.idx[i] + 1].first;
      heap.push(std::move(child));
    }
  }
  return out;
}

ConstraintFamily supportFamily(const SymbolMatrix& P) {
  std::vector<SymbolSet> ex;
  ex.reserve(P.explicitColumns().size());
  for (const Column& c : P.explicitColumns()) ex.push_back(c.support());
  TailRule tail;
  tail.kind = P.tailCycle().size() == 1 ? TailRule::Kind::ConstantSet
                                        : TailRule::Kind::CyclicSets;
  for (const Column& c : P.tailCycle()) tail.sets.push_back(c.support());
  return ConstraintFamily::ofRules(std::move(ex), std::move(tail));
}

SupportReport supportReport(const SymbolMatrix& P, std::size_t maxDepth,
                            const MeasureOptions& opt) {
  SupportReport out;
  out.measure = zeroMeasureCertificate(supportFamily(P), maxDepth, opt);
  for (const Column& c : P.tailCycle())
    if (c.hasZeroEntry()) {
      out.nowhereDense = true;
      break;
    }
  return out;
}

}  // namespace ostro
