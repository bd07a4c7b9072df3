/// Alternating reciprocal-product expansions of numbers in (0, 1).
///
/// A value is encoded by difference symbols g_1, g_2, ... (all >= 1); the
/// partial sums sigma_k = g_1 + ... + g_k form the strictly increasing
/// denominator sequence q_k, and the represented value is
///
///   x = 1/q_1 - 1/(q_1 q_2) + 1/(q_1 q_2 q_3) - ...
///
/// Every rational in (0, 1) has a finite expansion (exhausted = true); an
/// expansion with exhausted = false is an explicit prefix of some longer,
/// possibly infinite, expansion.
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "ostro/rational.hpp"

namespace ostro {

class O1Expansion {
 public:
  /// Validates every symbol >= 1.  An empty symbol list is representable
  /// (it denotes "no information") but rejected by evaluating operations.
  explicit O1Expansion(std::vector<mpz_class> g, bool exhausted = true);

  const std::vector<mpz_class>& g() const { return g_; }
  bool exhausted() const { return exhausted_; }
  std::size_t size() const { return g_.size(); }

  /// Denominator sequence q_k = g_1 + ... + g_k (strictly increasing).
  std::vector<mpz_class> q() const;

  O1Expansion prefix(std::size_t k) const;

 private:
  std::vector<mpz_class> g_;
  bool exhausted_;
};

/// One row of the convergent recurrence: value A/B approximates the number,
/// B is the product of the first `order` denominators (kept unreduced).
struct Convergent {
  mpz_class A;
  mpz_class B;
  std::size_t order = 0;

  Rational value() const { return Rational(A, B); }
};

/// Expands a rational; requires 0 < x < 1.  Stops when the remainder hits
/// zero (exhausted) or after maxSymbols symbols (prefix, exhausted = false).
O1Expansion expand(const Rational& x, std::size_t maxSymbols = 64);

/// Exact alternating sum of the listed symbols.  Throws on empty input.
Rational evaluate(const O1Expansion& e);

/// Convergents A_k/B_k for k = 1..n via
///   A_k = A_{k-1} q_k + (-1)^{k-1},  B_k = B_{k-1} q_k.
std::vector<Convergent> convergents(const O1Expansion& e);

/// Checks the alternation laws: odd-order convergents strictly decrease,
/// even-order strictly increase, and every odd exceeds every even.
bool alternationCheck(const O1Expansion& e);

/// Every finite value has exactly two expansions:
///   (..., g_n) with g_n >= 2   <->   (..., g_n - 1, 1).
/// Returns the other one; throws for the single-symbol expansion (1),
/// whose value 1/(g_1 = 1) = ... lies outside (0,1) rewritten, i.e. no
/// second form exists, and for non-exhausted input.
O1Expansion dualRepresentation(const O1Expansion& e);

/// Bound on |x - A_k/B_k| for any extension of the first k symbols:
///   1 / (q_1 q_2 ... q_k q_{k+1});  requires 1 <= k < size.
Rational truncationErrorBound(const O1Expansion& e, std::size_t k);

/// Text form "O1[g1,g2,...]", with ";..." before the bracket close for
/// non-exhausted prefixes.  parseText and toText round-trip byte-exactly.
std::string toText(const O1Expansion& e);
O1Expansion parseText(std::string_view text);

}  // namespace ostro
