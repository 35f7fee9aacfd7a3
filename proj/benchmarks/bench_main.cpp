#include <benchmark/benchmark.h>

#include <cstdlib>

#include "strata/formats.hpp"
#include "strata/growth.hpp"
#include "strata/layer.hpp"
#include "strata/morphometrics.hpp"
#include "strata/rule.hpp"
#include "strata/scan.hpp"

namespace {

using strata::GrowthConfig;
using strata::Layer;
using strata::TotalisticRule;
using strata::Tower;

// Concentric galleries: a solid core wrapped in detached square bands.
Layer stepped_plan(int side) {
    const int center = side / 2;
    Layer plan(side, side);
    for (int r = 0; r < side; ++r) {
        for (int c = 0; c < side; ++c) {
            const int d = std::max(std::abs(r - center), std::abs(c - center));
            if (d <= side / 4 || (d > side / 4 + 1 && (d - side / 4) % 2 == 0)) {
                plan.set(r, c, 1);
            }
        }
    }
    return plan;
}

void BM_step_layer(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const Layer layer = stepped_plan(side);
    const TotalisticRule rule = TotalisticRule::from_code(816);
    for (auto _ : state) {
        benchmark::DoNotOptimize(strata::step_layer(layer, rule));
    }
    state.SetItemsProcessed(state.iterations() * side * side);
}
BENCHMARK(BM_step_layer)->Arg(31)->Arg(63)->Arg(127);

void BM_grow_tower(benchmark::State& state) {
    const Layer plan = stepped_plan(31);
    const TotalisticRule rule = TotalisticRule::from_code(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(strata::grow_tower(plan, rule));
    }
}
BENCHMARK(BM_grow_tower)->Arg(816)->Arg(944)->Arg(512);

void BM_scan_rules(benchmark::State& state) {
    const Layer plan = stepped_plan(15);
    const Tower target = strata::grow_tower(plan, TotalisticRule::from_code(816));
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(strata::scan_rules(plan, target, strata::ScanMetric::kIoU,
                                                    GrowthConfig{}, 10, threads));
    }
}
BENCHMARK(BM_scan_rules)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_box_counting(benchmark::State& state) {
    const Tower tower = strata::grow_tower(stepped_plan(31), TotalisticRule::from_code(816));
    for (auto _ : state) {
        benchmark::DoNotOptimize(strata::box_counting_dimension(tower, 5));
    }
}
BENCHMARK(BM_box_counting);

void BM_export_slices(benchmark::State& state) {
    const Tower tower = strata::grow_tower(stepped_plan(31), TotalisticRule::from_code(816));
    for (auto _ : state) {
        benchmark::DoNotOptimize(strata::export_slices(tower));
    }
}
BENCHMARK(BM_export_slices);

} // namespace

BENCHMARK_MAIN();
