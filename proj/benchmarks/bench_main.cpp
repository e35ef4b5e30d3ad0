#include <benchmark/benchmark.h>

#include <random>

#include "indpoly/analysis.hpp"
#include "indpoly/engines.hpp"
#include "indpoly/tree.hpp"

using namespace indpoly;

namespace {

DensePolynomial dense_poly(int degree, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<BigInt> coeffs(static_cast<size_t>(degree) + 1);
  for (auto& c : coeffs) c = static_cast<long>(1 + rng() % 1000);
  return DensePolynomial(std::move(coeffs));
}

void BM_PolyMul(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  const DensePolynomial p = dense_poly(degree, 1);
  const DensePolynomial q = dense_poly(degree, 2);
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PolyMul)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void BM_IndpolyDp_TG(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  const RootedTree tree = tree_TG(3, t);
  for (auto _ : state) benchmark::DoNotOptimize(indpoly_dp(tree));
}
BENCHMARK(BM_IndpolyDp_TG)->Arg(2)->Arg(5)->Arg(8);

void BM_RecursiveEngine_TG25(benchmark::State& state) {
  const RootedTree tree = tree_TG(2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(indpoly_recursive(tree));
}
BENCHMARK(BM_RecursiveEngine_TG25);

void BM_Bruteforce(benchmark::State& state) {
  const RootedTree tree = path(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(indpoly_bruteforce(tree));
}
BENCHMARK(BM_Bruteforce)->Arg(18)->Arg(22)->Arg(24);

void BM_ClosedFormTG(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_TG(3, t));
}
BENCHMARK(BM_ClosedFormTG)->Arg(10)->Arg(20)->Arg(40);

void BM_TheoremSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(theorem_sweep(5, 12));
}
BENCHMARK(BM_TheoremSweep);

}  // namespace

BENCHMARK_MAIN();
