// Serial reference against the OpenMP path for the oracle sweep and the per-case and
// per-family evaluation.

#include <benchmark/benchmark.h>

#include "wres/boundary.hpp"
#include "wres/oracle.hpp"
#include "wres/verifier.hpp"

using namespace wres;

namespace {

const std::vector<OracleIdentity>& identities() {
  static const auto ids = oracle_identities({Family::dirac, Family::signature});
  return ids;
}

void oracle_sweep(benchmark::State& state, bool parallel) {
  const auto& ids = identities();
  const int seeds = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_oracle(ids, 0, seeds, 2, parallel));
  state.SetItemsProcessed(state.iterations() * seeds);
}

void cases(benchmark::State& state, bool parallel) {
  const BoundaryContext ctx(Family::signature);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_all(ctx, parallel));
}

void families(benchmark::State& state, bool parallel) {
  const SuiteSpec spec = parse_spec("family = both\nchecks = [parametrix, cases, psi, lichnerowicz, interior]");
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(spec, parallel));
}

}  // namespace

BENCHMARK_CAPTURE(oracle_sweep, serial, false)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(oracle_sweep, openmp, true)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(cases, serial, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(cases, openmp, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(families, serial, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(families, openmp, true)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
