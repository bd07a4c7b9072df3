/// Admissible-symbol sets: the per-rank alphabets a constraint family allows.
///
/// Each set kind carries closed-form knowledge of how much of a cylinder of
/// symbol sum sigma survives when the next symbol is restricted to the set:
/// the children with symbol c occupy the fraction
///   f_c(sigma + 1) = (sigma + 1) / ((sigma + c)(sigma + c + 1))
/// of the parent, and those fractions telescope over runs of consecutive c.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ostro/enclosure.hpp"
#include "ostro/rational.hpp"

namespace ostro {

/// Exact value of sum_{c > N} 1 / prod_i (c + shifts[i]).
/// Requires at least two distinct nonnegative shifts (so the sum converges)
/// and N >= 0.  Evaluated by partial fractions over harmonic prefix runs.
Rational tailProductSum(const mpz_class& N, const std::vector<mpz_class>& shifts);

/// Enclosure of sum_{j >= 0} 1 / prod_i (c0 + j*d + shifts[i]) for a stride-d
/// subsample of the same terms; c0 >= 1, d >= 1.
Enclosure progressionTailSum(const mpz_class& c0, const mpz_class& d,
                             const std::vector<mpz_class>& shifts);

class SymbolSet {
 public:
  enum class Kind {
    All,                   // every positive integer
    FiniteSet,             // explicit sorted list
    UpTo,                  // {1, ..., m}
    TailFrom,              // {v+1, v+2, ...}
    Progression,           // {start, start+stride, ...}, stride >= 1
    ComplementList,        // all positive integers minus a finite list
    ComplementArithmetic,  // all positive integers minus {a1, a1+d, ...}
  };

  static SymbolSet all();
  static SymbolSet finiteSet(std::vector<mpz_class> elements);
  static SymbolSet upTo(const mpz_class& m);
  static SymbolSet tailFrom(const mpz_class& v);  // v >= 0; v = 0 means All-shaped
  static SymbolSet progression(const mpz_class& start, const mpz_class& stride);
  static SymbolSet complementList(std::vector<mpz_class> excluded);
  static SymbolSet complementArithmetic(const mpz_class& a1, const mpz_class& d);

  Kind kind() const { return kind_; }
  const std::vector<mpz_class>& elements() const { return elems_; }
  const mpz_class& param() const { return p_; }    // m, v, start, or a1
  const mpz_class& stride() const { return d_; }   // progression/arithmetic stride

  bool contains(const mpz_class& c) const;
  bool isFinite() const;
  mpz_class minElement() const;
  /// Largest element of a finite set; unset for infinite kinds.
  std::optional<mpz_class> maxElement() const;
  /// t-th smallest element (t >= 1); unset when the set has fewer elements.
  std::optional<mpz_class> kthElement(std::uint64_t t) const;

  /// Fraction of a parent cylinder with symbol sum sigma covered by children
  /// whose symbol lies in this set: sum of f_c(sigma + 1) over members.
  /// A point enclosure for kinds with elementary closed forms.
  Enclosure admissibleFraction(const mpz_class& sigma) const;

  /// Bounds on admissibleFraction(sigma) valid for every sigma >= sigmaMin.
  Enclosure admissibleFractionRange(const mpz_class& sigmaMin) const;

  std::string describe() const;

 private:
  SymbolSet(Kind k, std::vector<mpz_class> elems, mpz_class p, mpz_class d)
      : kind_(k), elems_(std::move(elems)), p_(std::move(p)), d_(std::move(d)) {}

  Kind kind_;
  std::vector<mpz_class> elems_;  // FiniteSet members / ComplementList exclusions
  mpz_class p_;                   // UpTo m / TailFrom v / Progression start / arithmetic a1
  mpz_class d_;                   // stride
};

}  // namespace ostro
