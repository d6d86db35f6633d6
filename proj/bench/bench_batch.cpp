// Serial reference vs OpenMP kernels: recurrence table over a point cloud
// and the weighted Gram matrix of that table.

#include "qortho/batch.hpp"
#include "qortho/qpara_racah.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace qortho;

const qpr::Family<double> kFamily{0.9, 0.7, 0.3, 0.5, 9};

struct Workload {
  TridiagonalSystem<double> sys;
  std::vector<double> x, w;
  std::size_t rows;
};

Workload make_workload(std::size_t points) {
  Workload wl{qpr::tridiagonal(kFamily), {}, {}, static_cast<std::size_t>(kFamily.N + 1)};
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> xs(1.0, 60.0), ws(0.0, 1.0);
  wl.x.resize(points);
  wl.w.resize(points);
  for (std::size_t i = 0; i < points; ++i) {
    wl.x[i] = xs(rng);
    wl.w[i] = ws(rng) / static_cast<double>(points);
  }
  return wl;
}

void BM_TableSerial(benchmark::State& state) {
  const auto wl = make_workload(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(batch::serial::evaluate_table<double>(wl.sys, wl.x, wl.rows));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_TableOpenMP(benchmark::State& state) {
  const auto wl = make_workload(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(batch::evaluate_table(wl.sys, wl.x, wl.rows));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_GramSerial(benchmark::State& state) {
  const auto wl = make_workload(static_cast<std::size_t>(state.range(0)));
  const auto table = batch::serial::evaluate_table<double>(wl.sys, wl.x, wl.rows);
  for (auto _ : state)
    benchmark::DoNotOptimize(batch::serial::gram_matrix<double>(table, wl.w));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_GramOpenMP(benchmark::State& state) {
  const auto wl = make_workload(static_cast<std::size_t>(state.range(0)));
  const auto table = batch::evaluate_table(wl.sys, wl.x, wl.rows);
  for (auto _ : state)
    benchmark::DoNotOptimize(batch::gram_matrix(table, wl.w));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

BENCHMARK(BM_TableSerial)->RangeMultiplier(8)->Range(1 << 12, 1 << 21)->UseRealTime();
BENCHMARK(BM_TableOpenMP)->RangeMultiplier(8)->Range(1 << 12, 1 << 21)->UseRealTime();
BENCHMARK(BM_GramSerial)->RangeMultiplier(8)->Range(1 << 12, 1 << 21)->UseRealTime();
BENCHMARK(BM_GramOpenMP)->RangeMultiplier(8)->Range(1 << 12, 1 << 21)->UseRealTime();

BENCHMARK_MAIN();
