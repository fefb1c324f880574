#include <benchmark/benchmark.h>

#include "qseries/catalog.hpp"
#include "qseries/engine.hpp"

using namespace qseries;

namespace {

Dims uniform_dims(const Identity& id, int value) {
  Dims d;
  for (const auto& name : id.dim_names) d[name] = value;
  return d;
}

void BM_QpochFinite(benchmark::State& state) {
  const QComplex a(0.3, 0.1), q(0.4);
  for (auto _ : state) benchmark::DoNotOptimize(qpoch_finite(a, q, state.range(0)));
}
BENCHMARK(BM_QpochFinite)->Arg(8)->Arg(64);

void BM_QpochInfinite(benchmark::State& state) {
  const QComplex a(0.3, 0.1), q(static_cast<double>(state.range(0)) / 10.0);
  for (auto _ : state) benchmark::DoNotOptimize(qpoch_infinite(a, q));
}
BENCHMARK(BM_QpochInfinite)->Arg(2)->Arg(5)->Arg(8);

void BM_QpochScaled(benchmark::State& state) {
  const QComplex a(0.2), q(0.5);
  const QComplex step = principal_power(q, QComplex(1.7));
  for (auto _ : state) benchmark::DoNotOptimize(qpoch_scaled(a, q, step, 5));
}
BENCHMARK(BM_QpochScaled);

/// One side of an identity at a sampled point; range(0) is the dimension.
void evaluate_side(benchmark::State& state, const char* id_name) {
  const Identity& id = lookup(id_name);
  const Dims dims = uniform_dims(id, static_cast<int>(state.range(0)));
  const Sample s = sample_domain(id, dims, 1, 1).front();
  const SeriesSide side = id.lhs(dims);
  long shells = 0;
  for (auto _ : state) {
    const auto r = evaluate(side, s.params, s.bases);
    shells = r.diagnostics.shells;
    benchmark::DoNotOptimize(r.value);
  }
  state.counters["shells"] = static_cast<double>(shells);
}

void BM_EvaluateThmHeine7(benchmark::State& state) { evaluate_side(state, "thm_heine7"); }
BENCHMARK(BM_EvaluateThmHeine7)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_EvaluateRam1410(benchmark::State& state) { evaluate_side(state, "ram_1_4_10_anm"); }
BENCHMARK(BM_EvaluateRam1410)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_VerifyKajihara(benchmark::State& state) {
  const Identity& id = lookup("kajihara");
  const Dims dims = uniform_dims(id, static_cast<int>(state.range(0)));
  const Sample s = sample_domain(id, dims, 1, 1).front();
  for (auto _ : state) benchmark::DoNotOptimize(verify(id, s.params, s.bases, {}, 1e-18).rel_error);
}
BENCHMARK(BM_VerifyKajihara)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_VerifyComposed(benchmark::State& state) {
  const auto composed = engine::compose(engine::parse_assignment(
      R"({"blocks":[{"block":"milne_lilly","dims":{"n":2}},{"block":"gustafson_krattenthaler"}],"base":{"block":"extra_c"}})"));
  const Sample s = sample_domain(composed.identity, composed.dims, 1, 1).front();
  for (auto _ : state)
    benchmark::DoNotOptimize(verify(composed.identity, s.params, s.bases, {}, 1e-18).rel_error);
}
BENCHMARK(BM_VerifyComposed)->Unit(benchmark::kMillisecond);

void BM_PropertyH(benchmark::State& state) {
  const auto& block = engine::find_block("kajihara");
  for (auto _ : state) benchmark::DoNotOptimize(engine::check_property_H(block, 8, 1).max_deviation);
}
BENCHMARK(BM_PropertyH)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
