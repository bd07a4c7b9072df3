/// Shared helpers for the unit suites: reproducible pseudo-random inputs and
/// a brute-force level-measure oracle that enumerates admissible bases
/// directly, independent of the library's state engine.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "ostro/constraint_family.hpp"
#include "ostro/cylinder.hpp"
#include "ostro/rational.hpp"
#include "ostro/symbol_set.hpp"

namespace testutil {

/// Reduced p/q with 0 < p/q < 1 and 2 <= q <= maxDen.
inline ostro::Rational randomUnitRational(std::mt19937_64& gen, long maxDen) {
  std::uniform_int_distribution<long> denDist(2, maxDen);
  for (;;) {
    const long q = denDist(gen);
    std::uniform_int_distribution<long> numDist(1, q - 1);
    const long p = numDist(gen);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), mpz_class(p).get_mpz_t(), mpz_class(q).get_mpz_t());
    if (g == 1) return ostro::Rational(p, q);
  }
}

inline std::vector<mpz_class> members(const ostro::SymbolSet& v, std::uint64_t count) {
  std::vector<mpz_class> out;
  for (std::uint64_t t = 1; t <= count; ++t) {
    const auto e = v.kthElement(t);
    if (!e) break;
    out.push_back(*e);
  }
  return out;
}

/// Exact lambda(M_depth) by explicit enumeration of every admissible base.
/// Only usable when each plan set up to `depth` is finite and non-adaptive.
inline ostro::Rational bruteLevelMeasure(const ostro::ConstraintFamily& fam,
                                         std::size_t depth) {
  ostro::Rational total;
  std::vector<mpz_class> base;
  const auto recurse = [&](auto&& self, std::size_t rank) -> void {
    if (rank > depth) {
      total += ostro::Cylinder(base).length();
      return;
    }
    const ostro::RankPlan plan = fam.planAt(rank);
    if (plan.adaptive || !plan.set.isFinite())
      throw std::domain_error("brute oracle needs finite rank sets");
    for (std::uint64_t t = 1;; ++t) {
      const auto e = plan.set.kthElement(t);
      if (!e) break;
      base.push_back(*e);
      self(self, rank + 1);
      base.pop_back();
    }
  };
  recurse(recurse, 1);
  return total;
}

}  // namespace testutil
