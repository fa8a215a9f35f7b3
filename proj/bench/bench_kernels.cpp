// Serial reference against the OpenMP kernels: lattice point counting in
// dilates and batch classification.

#include "fixtures.hpp"
#include "toricfano/batch.hpp"
#include "toricfano/polytope.hpp"

#include <benchmark/benchmark.h>

using namespace toricfano;

namespace {

const LatticePolytope &cube_polar() {
  static const LatticePolytope p = polar(convex_hull(fixtures::octahedron()));
  return p;
}

const std::vector<PolytopeRecord> &records() {
  static const std::vector<PolytopeRecord> recs = [] {
    std::vector<PolytopeRecord> out;
    Int id = 1;
    for (const auto &p : fixtures::random_reflexive(500, 5)) out.push_back({id++, p.vertices()});
    return out;
  }();
  return recs;
}

void BM_LatticePointsReference(benchmark::State &state) {
  const auto &p = cube_polar();
  for (auto _ : state) benchmark::DoNotOptimize(lattice_points_reference(p, state.range(0)));
}

void BM_LatticePoints(benchmark::State &state) {
  const auto &p = cube_polar();
  for (auto _ : state) benchmark::DoNotOptimize(lattice_points(p, state.range(0)));
}

void BM_ClassifySerial(benchmark::State &state) {
  const auto &recs = records();
  for (auto _ : state) benchmark::DoNotOptimize(classify_records_serial(recs));
}

void BM_ClassifyParallel(benchmark::State &state) {
  const auto &recs = records();
  for (auto _ : state) benchmark::DoNotOptimize(classify_records(recs, static_cast<int>(state.range(0))));
}

} // namespace

BENCHMARK(BM_LatticePointsReference)->Arg(8)->Arg(32)->Arg(64);
BENCHMARK(BM_LatticePoints)->Arg(8)->Arg(32)->Arg(64);
BENCHMARK(BM_ClassifySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifyParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
