#include <benchmark/benchmark.h>

#include <vector>

#include "primel/engine.hpp"
#include "primel/generators.hpp"
#include "primel/quotient.hpp"
#include "primel/subalgebra.hpp"

using namespace primel;

namespace {

Poly roots_poly(long count, long offset) {
  Poly out = Poly::constant(1);
  for (long r = 0; r < count; ++r) out *= Poly::linear(Rational(r * r + offset));
  return out;
}

void BM_Resultant(benchmark::State& state) {
  const Poly f = roots_poly(state.range(0), 1);
  const Poly g = roots_poly(state.range(0), -3) + Poly::constant(1);
  for (auto _ : state) benchmark::DoNotOptimize(resultant(f, g));
}
BENCHMARK(BM_Resultant)->Arg(4)->Arg(8)->Arg(12);

void BM_ValuesPoly(benchmark::State& state) {
  const Poly f = roots_poly(state.range(0), 0);
  const Poly g = roots_poly(3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(values_poly(f, g, Rational(3)));
}
BENCHMARK(BM_ValuesPoly)->Arg(3)->Arg(9)->Arg(27);

void BM_FindLinearForm(benchmark::State& state) {
  std::vector<Poly> gens;
  for (long i = 0; i < state.range(0); ++i) gens.push_back(roots_poly(3, i));
  const QuotientAlgebra alg(gens);
  for (auto _ : state) benchmark::DoNotOptimize(find_primitive_linear_form(alg));
}
BENCHMARK(BM_FindLinearForm)->Arg(2)->Arg(3);

void BM_MinPolyMatrix(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix s = random_unimodular(n, 3);
  const Matrix c = companion(roots_poly(state.range(0), 1));
  const Matrix m = s * c * *inverse(s);
  for (auto _ : state) benchmark::DoNotOptimize(min_poly_matrix(m));
}
BENCHMARK(BM_MinPolyMatrix)->Arg(4)->Arg(8)->Arg(12);

void BM_AnalyzeBlockPair(benchmark::State& state) {
  const auto [a, b] = rho_pair(CounterexampleSpec(Poly::from_integers({2, -3, 0, 1}),
                                                  Poly::from_integers({1, 2, 1})));
  const std::vector<Matrix> ms{a, b};
  for (auto _ : state) benchmark::DoNotOptimize(analyze(ms));
}
BENCHMARK(BM_AnalyzeBlockPair);

void BM_AnalyzeFrobenius(benchmark::State& state) {
  const auto [a, b] = frobenius_pair();
  const std::vector<Matrix> ms{a, b};
  for (auto _ : state) benchmark::DoNotOptimize(analyze(ms));
}
BENCHMARK(BM_AnalyzeFrobenius);

}  // namespace

BENCHMARK_MAIN();
