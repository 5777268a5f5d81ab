#include <benchmark/benchmark.h>

#include <random>

#include "courant/constructions.hpp"
#include "courant/ecourant.hpp"
#include "courant/gcs.hpp"
#include "courant/io.hpp"
#include "courant/linalg.hpp"

using namespace courant;

static void BM_BuildOmni(benchmark::State& state) {
  const std::size_t n = state.range(0);
  for (auto _ : state) {
    ECourantStructure c = build_omni(n);
    benchmark::DoNotOptimize(c.bracket.a.data());
  }
}
BENCHMARK(BM_BuildOmni)->Arg(2)->Arg(3)->Arg(4);

static void BM_CheckEcAxiomsOmni(benchmark::State& state) {
  ECourantStructure c = build_omni(state.range(0));
  for (auto _ : state) {
    CheckReport r = check_ec_axioms(c);
    benchmark::DoNotOptimize(r.entries.data());
  }
}
BENCHMARK(BM_CheckEcAxiomsOmni)->Arg(2)->Arg(3);

static void BM_Integrability(benchmark::State& state) {
  ECourantStructure c = build_omni(2);
  Matrix j = assemble_omni_j(2, Tensor3(2, 2, 2), d_preset("rot2", 2));
  for (auto _ : state) {
    CheckReport r = check_gcs_integrable(c, j);
    benchmark::DoNotOptimize(r.entries.data());
  }
}
BENCHMARK(BM_Integrability);

static void BM_Eigenbundle(benchmark::State& state) {
  ECourantStructure c = build_omni(2);
  Matrix j = assemble_omni_j(2, Tensor3(2, 2, 2), d_preset("rot2", 2));
  for (auto _ : state) {
    DiracSubspace s = eigenbundle(c, j);
    benchmark::DoNotOptimize(s.basis.data());
  }
}
BENCHMARK(BM_Eigenbundle);

static void BM_ExactSolve(benchmark::State& state) {
  const std::size_t n = state.range(0);
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> coeff(-3, 3);
  Matrix a(n, n);
  Vec b(n);
  for (Scalar& s : a.a) s = Scalar(coeff(rng));
  for (Scalar& s : b) s = Scalar(coeff(rng));
  for (auto _ : state) {
    auto x = solve_linear(a, b);
    benchmark::DoNotOptimize(&x);
  }
}
BENCHMARK(BM_ExactSolve)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
