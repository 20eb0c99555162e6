// Microbenchmarks for the hot paths: predimension, dimension/closure,
// automorphism search, pair enumeration and canonical codes, disjoint-copy
// packing, and tree decomposition.

#include <benchmark/benchmark.h>

#include "smc/closure.hpp"
#include "smc/decomp.hpp"
#include "smc/fixtures.hpp"
#include "smc/pairs.hpp"
#include "smc/predim.hpp"
#include "smc/search.hpp"
#include "smc/structure.hpp"

using namespace smc;

namespace {

const Structure& examp1() {
  static const Structure s = fixture_structure("examp1");
  return s;
}

const Structure& examp2() {
  static const Structure s = fixture_structure("examp2");
  return s;
}

void BM_Delta(benchmark::State& state) {
  const Structure& s = examp2();
  for (auto _ : state) benchmark::DoNotOptimize(delta(s, s.all()));
}
BENCHMARK(BM_Delta);

void BM_Dim(benchmark::State& state) {
  const Structure& s = examp2();
  const PointSet A = s.set_of_names({"alpha1", "alpha2"});
  for (auto _ : state) benchmark::DoNotOptimize(dim(s, A));
}
BENCHMARK(BM_Dim);

void BM_DimOracle(benchmark::State& state) {
  const Structure& s = examp2();
  const PointSet A = s.set_of_names({"alpha1", "alpha2"});
  for (auto _ : state) {
    DimOracle oracle(s);
    benchmark::DoNotOptimize(oracle.dim(A));
  }
}
BENCHMARK(BM_DimOracle);

void BM_Icl(benchmark::State& state) {
  const Structure& s = examp2();
  const PointSet A = s.set_of_names({"gamma1"});
  for (auto _ : state) benchmark::DoNotOptimize(icl(s, A).closure);
}
BENCHMARK(BM_Icl);

void BM_Automorphisms(benchmark::State& state) {
  const Structure& s = examp2();
  for (auto _ : state) benchmark::DoNotOptimize(automorphisms(s).size());
}
BENCHMARK(BM_Automorphisms);

void BM_GoodPairs(benchmark::State& state) {
  const Structure& s = examp1();
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_good_pairs(s, 4).size());
}
BENCHMARK(BM_GoodPairs);

void BM_PairCode(benchmark::State& state) {
  const Structure& s = examp1();
  const PointSet A = s.set_of_names({"c1", "c2"});
  const PointSet B = s.set_of_names({"b1", "b2"});
  for (auto _ : state) benchmark::DoNotOptimize(pair_code(s, A, B).bytes);
}
BENCHMARK(BM_PairCode);

void BM_Chi(benchmark::State& state) {
  const Structure& s = examp2();
  const PointSet A = s.set_of_names({"c1", "c3"});
  const PointSet B = s.set_of_names({"a1", "a2"});
  for (auto _ : state) benchmark::DoNotOptimize(chi(s, A, B));
}
BENCHMARK(BM_Chi);

void BM_TreeDecompose(benchmark::State& state) {
  const Structure& s = examp1();
  const PointSet I = s.set_of_names({"a1", "a2"});
  for (auto _ : state)
    benchmark::DoNotOptimize(
        tree_decompose(s, I, StabilizerKind::Pointwise).petals.size());
}
BENCHMARK(BM_TreeDecompose);

}  // namespace

BENCHMARK_MAIN();
