#include <benchmark/benchmark.h>

#include "scaleswim/gait.hpp"

using namespace scaleswim;

namespace {

void BM_Motility(benchmark::State& state) {
    DragParams p;
    double alpha = -1.3;
    for (auto _ : state) {
        alpha = -alpha;
        benchmark::DoNotOptimize(motility(alpha, Variant::SR(), p));
    }
}
BENCHMARK(BM_Motility);

void BM_ScaledMotility(benchmark::State& state) {
    DragParams p;
    double alpha = 0.9;
    for (auto _ : state) {
        alpha = -alpha;
        benchmark::DoNotOptimize(scaled_motility(alpha, RateSign::Plus, p));
    }
}
BENCHMARK(BM_ScaledMotility);

void BM_ResolveConsistentVariants(benchmark::State& state) {
    DragParams p;
    for (auto _ : state)
        benchmark::DoNotOptimize(resolve_consistent_variants(0.7, -1.1, p));
}
BENCHMARK(BM_ResolveConsistentVariants);

void BM_SimulateCycle(benchmark::State& state) {
    DragParams p;
    const SinusoidGait gait(0.0, 0.8, 1.0);
    const Model model = Model::scaled();
    const int steps = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(simulate(gait, model, p, steps));
    state.SetItemsProcessed(state.iterations() * steps);
}
BENCHMARK(BM_SimulateCycle)->Arg(256)->Arg(1024)->Arg(4096);

void BM_PredictDisplacement(benchmark::State& state) {
    DragParams p;
    const SinusoidGait gait(0.0, 0.8, 1.0);
    const Model model = Model::scaled();
    for (auto _ : state)
        benchmark::DoNotOptimize(predict_displacement(gait, model, p));
}
BENCHMARK(BM_PredictDisplacement);

void BM_ConsistencySurvey(benchmark::State& state) {
    DragParams p;
    std::vector<double> axis;
    const int n = static_cast<int>(state.range(0));
    for (int i = 0; i < n; ++i) axis.push_back(-1.5 + 3.0 * i / (n - 1));
    for (auto _ : state)
        benchmark::DoNotOptimize(consistency_survey(axis, axis, p));
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_ConsistencySurvey)->Arg(21)->Arg(41);

}  // namespace

BENCHMARK_MAIN();
