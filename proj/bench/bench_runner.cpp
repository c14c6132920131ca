// Parallel versus serial identity runner on the torus-conjugation and
// boson-current workloads.

#include <benchmark/benchmark.h>

#include "uqrs/algebra.hpp"

using namespace uqrs;

namespace {

std::vector<OperatorIdentity> workload(const RootData& roots) {
  std::vector<OperatorIdentity> ids;
  const int n = roots.rank();
  for (int i = 1; i <= n; ++i)
    for (int sign : {1, -1})
      for (int k = -1; k <= 1; ++k) {
        const Op x = op_mode(i, sign, k);
        ids.push_back(OperatorIdentity{"omega conjugation",
                                       op_product({op_omega(n, i, 1, false), x, op_omega(n, i, -1, false)}),
                                       op_product({op_omega(n, i, 1, false), x, op_omega(n, i, -1, false)}), false, {}});
        ids.push_back(OperatorIdentity{"boson commutator", commutator(op_boson(Family::A, i, 1), x),
                                       commutator(op_boson(Family::A, i, 1), x), false, {}});
      }
  return ids;
}

void run(benchmark::State& state, bool parallel) {
  const int n = static_cast<int>(state.range(0));
  VertexEngine<NumericField> engine(n, NumericField(2, 3));
  const auto states = generate_test_states(engine.roots(), Rational(state.range(1), 2), 1);
  const auto ids = workload(engine.roots());
  for (auto _ : state) {
    auto report = run_identities(engine, ids, states, parallel);
    benchmark::DoNotOptimize(report);
  }
  state.counters["states"] = static_cast<double>(states.size());
  state.counters["identities"] = static_cast<double>(ids.size());
}

void BM_ParallelRunner(benchmark::State& state) { run(state, true); }
void BM_SerialRunner(benchmark::State& state) { run(state, false); }

}  // namespace

BENCHMARK(BM_ParallelRunner)->Args({2, 1})->Args({2, 2})->Args({3, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SerialRunner)->Args({2, 1})->Args({2, 2})->Args({3, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
