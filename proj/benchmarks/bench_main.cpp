#include <benchmark/benchmark.h>

#include <random>

#include "ordcurves/constructions.hpp"
#include "ordcurves/determined.hpp"
#include "ordcurves/linalg.hpp"
#include "ordcurves/nd_families.hpp"
#include "ordcurves/projection.hpp"

using namespace ordcurves;

namespace {

std::vector<PlanePoint> sample(std::size_t count, int genericity, std::uint64_t seed) {
  SampleParams sp;
  sp.count = count;
  sp.genericity = genericity;
  return sample_configuration(ConstructionKind::random_general, sp, seed).points;
}

void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Vector v;
    for (std::size_t j = 0; j < n; ++j) {
      Rational r(static_cast<long>(rng() % 19) - 9, 1 + rng() % 7);
      r.canonicalize();
      v.push_back(r);
    }
    rows.push_back(v);
  }
  Matrix m = Matrix::from_rows(rows, n);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(6)->Arg(10)->Arg(16);

void BM_EnumerateDetermined(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto size = static_cast<std::size_t>(state.range(1));
  PointConfiguration a(sample(size, d, 3), d);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_determined(a, {1}).curves.size());
}
BENCHMARK(BM_EnumerateDetermined)->Args({1, 12})->Args({2, 10})->Args({2, 13})->Args({3, 12})->Unit(benchmark::kMillisecond);

void BM_EnumerateDeterminedWorkers(benchmark::State& state) {
  PointConfiguration a(sample(13, 2, 3), 2);
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_determined(a, {workers}).curves.size());
}
BENCHMARK(BM_EnumerateDeterminedWorkers)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_NdVerify(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  auto pts = sample(basis_size(d), 1, 5);
  for (auto _ : state) benchmark::DoNotOptimize(nd_verify({}, pts, d).member);
}
BENCHMARK(BM_NdVerify)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

void BM_GrowChain(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  auto pts = sample(basis_size(d) + 4, 1, 8);
  ChainOptions co;
  co.order = seeded_order(pts.size(), 8);
  for (auto _ : state) benchmark::DoNotOptimize(grow_nd_chain(pts, d, co).success);
}
BENCHMARK(BM_GrowChain)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_CurvesFromBasis(benchmark::State& state) {
  auto pts = sample(10, 2, 4);
  ChainOptions co;
  co.order = seeded_order(pts.size(), 4);
  ChainResult r = grow_nd_chain(pts, 2, co);
  PointConfiguration a(pts, 2);
  for (auto _ : state) benchmark::DoNotOptimize(curves_from_basis(a, r.basis).trace.emitted);
}
BENCHMARK(BM_CurvesFromBasis)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
