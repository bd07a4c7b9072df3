/// Microbenchmarks for the hot paths: expansion round-trips, cylinder
/// geometry, level enclosures, CDF evaluation, and sampling.

#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "ostro/constraint_family.hpp"
#include "ostro/cylinder.hpp"
#include "ostro/expansion.hpp"
#include "ostro/measure.hpp"
#include "ostro/random_variable.hpp"
#include "ostro/symbol_matrix.hpp"

namespace {

using namespace ostro;

void BM_ExpandRoundTrip(benchmark::State& state) {
  const long q = state.range(0);
  for (auto _ : state) {
    for (long p = 1; p < q; ++p) {
      if (mpz_class(gcd(mpz_class(p), mpz_class(q))) != 1) continue;
      const Rational x{mpz_class(p), mpz_class(q)};
      benchmark::DoNotOptimize(evaluate(expand(x)));
    }
  }
}
BENCHMARK(BM_ExpandRoundTrip)->Arg(97)->Arg(199);

void BM_CylinderLength(benchmark::State& state) {
  std::vector<mpz_class> base;
  for (long i = 0; i < state.range(0); ++i) base.emplace_back(i % 3 + 1);
  const Cylinder c{base};
  for (auto _ : state) benchmark::DoNotOptimize(c.length());
}
BENCHMARK(BM_CylinderLength)->Arg(8)->Arg(32);

void BM_MeasureLevels(benchmark::State& state) {
  const ConstraintFamily fam = ConstraintFamily::constant(SymbolSet::tailFrom(1));
  MeasureOptions opt;
  opt.truncation = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(measureLevels(fam, 3, opt));
}
BENCHMARK(BM_MeasureLevels)->Arg(64)->Arg(256);

void BM_ASigmaLayers(benchmark::State& state) {
  MeasureOptions opt;
  opt.truncation = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(aSigmaLayers(4, opt));
}
BENCHMARK(BM_ASigmaLayers)->Arg(128)->Arg(512);

SymbolMatrix fairTwoMatrix() {
  const Column col({Rational(1, 2), Rational(1, 2)}, std::nullopt);
  return SymbolMatrix({}, {col});
}

void BM_Cdf(benchmark::State& state) {
  const SymbolMatrix P = fairTwoMatrix();
  const Rational x(355, 452);
  for (auto _ : state) benchmark::DoNotOptimize(cdf(P, x));
}
BENCHMARK(BM_Cdf);

void BM_Sample(benchmark::State& state) {
  const SymbolMatrix P = fairTwoMatrix();
  Sampler sampler(P, 42);
  const Rational eps(1, 1u << 20);
  for (auto _ : state) benchmark::DoNotOptimize(sampler.sample(eps));
}
BENCHMARK(BM_Sample);

}  // namespace

BENCHMARK_MAIN();
