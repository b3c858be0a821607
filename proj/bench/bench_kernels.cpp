#include <benchmark/benchmark.h>

#include <memory>

#include "chebylie/kernels.hpp"
#include "chebylie/parallel.hpp"
#include "chebylie/weyl.hpp"

using namespace chebylie;

namespace {

const WeylGroup& group(const char* name) {
  static std::map<std::string, std::unique_ptr<WeylGroup>> cache;
  auto& slot = cache[name];
  if (!slot) slot = std::make_unique<WeylGroup>(WeylGroup::enumerate(RootSystem::parse(name)));
  return *slot;
}

// Orbit sums over F4 (or E6) are large enough to show the parallel speedup.
std::pair<ExpSum, ExpSum> operands(const char* name) {
  const WeylGroup& grp = group(name);
  const RootSystem& rs = grp.root_system();
  return {orbit_sum(grp, 2 * rs.fundamental_weight(0)), orbit_sum(grp, rs.rho())};
}

void bm_multiply(benchmark::State& state, const char* name, bool parallel) {
  const auto [a, b] = operands(name);
  for (auto _ : state) {
    auto r = parallel ? kernels::omp::multiply_terms(a.terms(), b.terms())
                      : kernels::serial::multiply_terms(a.terms(), b.terms());
    benchmark::DoNotOptimize(r);
  }
  state.counters["pairs"] = static_cast<double>(a.size() * b.size());
}

void bm_jacobian_entry(benchmark::State& state, const char* name, bool parallel) {
  const WeylGroup& grp = group(name);
  const RootSystem& rs = grp.root_system();
  const int k = static_cast<int>(state.range(0));
  const auto weights = orbit(rs, k * rs.fundamental_weight(0));
  const auto coroots = kernels::signed_coroot_orbit(rs, 0);
  for (auto _ : state) {
    auto r = parallel ? kernels::omp::jacobian_entry(rs, weights, coroots)
                      : kernels::serial::jacobian_entry(rs, weights, coroots);
    benchmark::DoNotOptimize(r);
  }
  state.counters["pairs"] = static_cast<double>(weights.size() * coroots.size());
}

}  // namespace

BENCHMARK_CAPTURE(bm_multiply, F4_serial, "F4", false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_multiply, F4_omp, "F4", true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_multiply, E6_serial, "E6", false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_multiply, E6_omp, "E6", true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_jacobian_entry, F4_serial, "F4", false)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_jacobian_entry, F4_omp, "F4", true)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_jacobian_entry, E6_serial, "E6", false)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bm_jacobian_entry, E6_omp, "E6", true)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  configure_workers_from_env();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::AddCustomContext("workers", std::to_string(worker_count()));
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
