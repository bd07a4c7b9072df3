/// Random numbers with independent expansion symbols: symbol k is drawn
/// from column k of a SymbolMatrix, and the series value of the resulting
/// symbol sequence is the random variable.
///
/// Everything exact: the CDF evaluates the alternating column-tail formula
/// at the argument's canonical expansion, cylinder probabilities are plain
/// column products, and the sampler inverts each column CDF at uniform
/// rationals k/2^64 from a seeded SplitMix64 stream.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ostro/constraint_family.hpp"
#include "ostro/measure.hpp"
#include "ostro/rational.hpp"
#include "ostro/symbol_matrix.hpp"

namespace ostro {

/// P(xi < x) evaluated exactly; 0 below the unit interval, 1 above, and the
/// boundary F(1) = 1 falls out of the formula at the expansion of 1.
Rational cdf(const SymbolMatrix& P, const Rational& x);

/// P(first symbols equal the base) = product of column probabilities.
Rational cylinderProbability(const SymbolMatrix& P, const std::vector<mpz_class>& base);

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

struct SamplePoint {
  std::vector<mpz_class> prefix;  // sampled leading symbols
  Rational value;                 // midpoint of the pinned cylinder
  Rational errorBound;            // |value - xi| <= errorBound
};

/// Deterministic per seed.  Each call draws one symbol per column until the
/// pinned cylinder is shorter than twice the requested error bound.
class Sampler {
 public:
  Sampler(const SymbolMatrix& P, std::uint64_t seed) : matrix_(&P), rng_(seed) {}

  SamplePoint sample(const Rational& maxError);
  SamplePoint sample() { return sample(defaultError()); }

  static const Rational& defaultError();  // 2^-60

 private:
  const SymbolMatrix* matrix_;
  SplitMix64 rng_;
};

enum class DistributionKind { Discrete, Continuous };
enum class ContinuousDetail { NotApplicable, CantorTypeSingular, Unresolved };

struct Classification {
  DistributionKind kind = DistributionKind::Continuous;
  ContinuousDetail detail = ContinuousDetail::NotApplicable;
  std::string evidence;
};

/// Discrete iff every tail-cycle column concentrates on one symbol (the
/// modal product then stays positive); otherwise continuous, with the
/// Cantor-type verdict delegated to the support's zero-measure certificate.
Classification classify(const SymbolMatrix& P, std::size_t certDepth = 4,
                        const MeasureOptions& opt = {});

struct Atom {
  std::vector<mpz_class> prefix;  // symbols at the explicit columns
  Rational probability;
};

/// Highest-probability atoms of a discrete distribution, most probable
/// first, ties toward lexicographically smaller prefixes.  Beyond the
/// explicit columns every atom continues with the forced tail symbols.
/// Throws logic_error for continuous distributions.
std::vector<Atom> atoms(const SymbolMatrix& P, std::size_t budget);

/// Modal symbols of columns 1..len (smallest argmax per column).
std::vector<mpz_class> modalPrefix(const SymbolMatrix& P, std::size_t len);

/// The topological support of xi as a constraint family (per-column
/// supports).  Throws domain_error when a column support is not expressible.
ConstraintFamily supportFamily(const SymbolMatrix& P);

struct SupportReport {
  MeasureReport measure;
  bool nowhereDense = false;
};

/// nowhereDense iff some tail-cycle column has a zero entry (then infinitely
/// many columns do); the measure side delegates to the zero certificate.
SupportReport supportReport(const SymbolMatrix& P, std::size_t maxDepth,
                            const MeasureOptions& opt = {});

}  // namespace ostro
