/// Column-stochastic symbol matrices: column k gives the distribution of the
/// k-th expansion symbol of a random number with independent symbols.
///
/// A column holds explicit probabilities for symbols 1..n plus an optional
/// geometric continuation: symbols n + stride, n + 2*stride, ... carry
/// p_n * r, p_n * r^2, ...  Normalization is checked exactly:
/// sum(explicit) + p_n * r/(1-r) must equal 1.  A matrix lists explicit
/// columns for the first ranks and a repeating cycle for every later rank,
/// so the whole infinite matrix has a finite description.
#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ostro/rational.hpp"
#include "ostro/symbol_set.hpp"

namespace ostro {

class Column {
 public:
  struct Geometric {
    Rational ratio;    // in (0, 1), exact
    mpz_class stride;  // >= 1
  };

  /// Validates: at least one probability, all nonnegative, positive seed
  /// before a continuation, and exact normalization to 1.
  Column(std::vector<Rational> probs, std::optional<Geometric> continuation);

  const std::vector<Rational>& explicitProbs() const { return probs_; }
  const std::optional<Geometric>& continuation() const { return geom_; }

  /// P(symbol = m); zero off the support.
  Rational prob(const mpz_class& m) const;

  /// P(symbol < m), exact (geometric partial sums in closed form).
  Rational cdfBelow(const mpz_class& m) const;

  Rational maxProb() const;
  /// Smallest symbol attaining maxProb.
  mpz_class modalSymbol() const;

  /// True when some symbol has probability zero (always true without a
  /// continuation, and for continuations of stride >= 2).
  bool hasZeroEntry() const;

  /// The support as a symbol set.  Throws domain_error when a stride >= 2
  /// continuation is combined with explicit probabilities that do not form
  /// the progression's own prefix.
  SymbolSet support() const;

  /// Inverse CDF: the symbol m with P(< m) <= u < P(< m) + P(m); u in [0, 1).
  mpz_class sampleSymbol(const Rational& u) const;

  /// Up to `count` positive-probability symbols ordered by descending
  /// probability, ties broken toward the smaller symbol.
  std::vector<std::pair<Rational, mpz_class>> topSymbols(std::size_t count) const;

 private:
  std::vector<Rational> probs_;
  std::optional<Geometric> geom_;
};

class SymbolMatrix {
 public:
  /// tailCycle must be nonempty; column(k) beyond the explicit columns walks
  /// the cycle.
  SymbolMatrix(std::vector<Column> explicitColumns, std::vector<Column> tailCycle);

  const Column& column(std::size_t k) const;  // k >= 1
  std::size_t horizon() const { return explicit_.size(); }
  const std::vector<Column>& explicitColumns() const { return explicit_; }
  const std::vector<Column>& tailCycle() const { return cycle_; }

 private:
  std::vector<Column> explicit_;
  std::vector<Column> cycle_;
};

}  // namespace ostro
