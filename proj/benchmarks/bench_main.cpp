#include <benchmark/benchmark.h>

#include <janowski/janowski.hpp>

using namespace janowski;

namespace {

const JanowskiParams kKoebe{Rational(1), Rational(-1)};

void BM_SeriesMulRational(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const auto f = extremal<Rational>(kKoebe, order).series;
  for (auto _ : state) benchmark::DoNotOptimize(mul(f, f));
}
BENCHMARK(BM_SeriesMulRational)->Arg(16)->Arg(32)->Arg(64);

void BM_SeriesMulComplex(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const auto f = extremal<Complex>(kKoebe, order).series;
  for (auto _ : state) benchmark::DoNotOptimize(mul(f, f));
}
BENCHMARK(BM_SeriesMulComplex)->Arg(64)->Arg(256);

void BM_Revert(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const auto f = extremal<Rational>(kKoebe, order).series;
  for (auto _ : state) benchmark::DoNotOptimize(revert(f));
}
BENCHMARK(BM_Revert)->Arg(8)->Arg(16)->Arg(32);

void BM_FromSchwarz(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const SchwarzSpec spec(SchwarzSpec::Blaschke{{Rational(1, 3)}});
  for (auto _ : state)
    benchmark::DoNotOptimize(from_schwarz<Rational>(spec, kKoebe, order));
}
BENCHMARK(BM_FromSchwarz)->Arg(12)->Arg(24);

void BM_BoundTable(benchmark::State& state) {
  const Rational lambda(7, 2);
  for (auto _ : state)
    for (long l = 1; l <= 24; ++l)
      benchmark::DoNotOptimize(bound_neg_power(kKoebe, lambda, l));
}
BENCHMARK(BM_BoundTable);

void BM_NegPowCampaignTrial(benchmark::State& state) {
  CampaignConfig cfg;
  cfg.trials = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_negpow_campaign(cfg));
}
BENCHMARK(BM_NegPowCampaignTrial);

}  // namespace

BENCHMARK_MAIN();
