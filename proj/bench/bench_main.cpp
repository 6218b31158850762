// Serial reference vs OpenMP kernels. Run with --benchmark_filter=... to pick.

#include <benchmark/benchmark.h>

#include <atomic>

#include "msplit/containment_graph.hpp"
#include "msplit/oracle.hpp"
#include "msplit/scan.hpp"
#include "msplit/split.hpp"
#include "msplit/thin_subgraph.hpp"

using namespace msplit;

namespace {

ScanBudget scan_budget() {
  ScanBudget b;
  b.max_delta = 2;
  b.max_size = 6;
  b.max_splits = 4;
  return b;
}

void BM_ScanSerial(benchmark::State& state) {
  const ScanBudget b = scan_budget();
  for (auto _ : state) benchmark::DoNotOptimize(scan_serial(b).systems);
}

void BM_ScanParallel(benchmark::State& state) {
  ScanBudget b = scan_budget();
  b.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan(b).systems);
}

// Many D2 pairs, most choices inconsistent: the pruned search wins here.
SplitSystem thin_case() {
  const Multiset m = Multiset::parse("a^2 b^2 c^2 d");
  SplitSystem s(m);
  for (const char* p : {"a", "b", "c", "a b", "b c", "a c"}) {
    s.add(Split::from_part(Multiset::parse(p), m));
  }
  return s;
}

void BM_ThinPruned(benchmark::State& state) {
  const ContainmentGraph g(thin_case());
  for (auto _ : state) {
    std::size_t n = 0;
    for_each_consistent_thin_subgraph(g, [&](const ThinSubgraph&) { return ++n, true; });
    benchmark::DoNotOptimize(n);
  }
}

void BM_ThinReference(benchmark::State& state) {
  const ContainmentGraph g(thin_case());
  for (auto _ : state) benchmark::DoNotOptimize(reference::consistent_thin_subgraphs(g).size());
}

const Multiset& oracle_ground() {
  static const Multiset m = Multiset::parse("a^2 b^2 c d");
  return m;
}

void BM_OracleSerial(benchmark::State& state) {
  for (auto _ : state) {
    std::size_t n = 0;
    oracle::for_each_labeling_serial(oracle_ground(), 4,
                                     [&](int, const auto&, const auto&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
}

void BM_OracleParallel(benchmark::State& state) {
  for (auto _ : state) {
    std::atomic<std::size_t> n{0};
    oracle::for_each_labeling(oracle_ground(), 4,
                              [&](int, const auto&, const auto&) { n.fetch_add(1, std::memory_order_relaxed); });
    benchmark::DoNotOptimize(n.load());
  }
}

}  // namespace

BENCHMARK(BM_ScanSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThinPruned)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ThinReference)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_OracleSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
