#include <benchmark/benchmark.h>

#include "cpt/report.hpp"

namespace {

using namespace cpt;

void BM_IntervalChain(benchmark::State& state) {
    const Interval power = make_interval(10.4, 21.1, "nW");
    const Interval hours = make_interval(14600, 14600, "h");
    const Interval ef = make_interval(0.4, 0.4, "kgCO2/kWh");
    for (auto _ : state) {
        benchmark::DoNotOptimize(mul(mul(power, hours), ef));
    }
}
BENCHMARK(BM_IntervalChain);

void BM_CatalogBuiltin(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(Catalog::builtin());
    }
}
BENCHMARK(BM_CatalogBuiltin);

void BM_Assess(benchmark::State& state) {
    const Catalog catalog = Catalog::builtin();
    const auto& processor = catalog.processor("i9-13900K");
    const scenario::UsageScenario def{};
    for (auto _ : state) {
        benchmark::DoNotOptimize(scenario::assess(catalog, processor, def));
    }
}
BENCHMARK(BM_Assess);

void BM_Sweep100(benchmark::State& state) {
    const Catalog catalog = Catalog::builtin();
    const auto& processor = catalog.processor("m3");
    const scenario::SweepSpec spec{scenario::SweepParameter::EmissionFactor, 0.05, 1.0,
                                   100};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            scenario::sweep(spec, scenario::UsageScenario{}, processor, catalog));
    }
}
BENCHMARK(BM_Sweep100);

void BM_ReproduceAndRender(benchmark::State& state) {
    const Catalog catalog = Catalog::builtin();
    for (auto _ : state) {
        benchmark::DoNotOptimize(report::render(report::reproduce_table3(catalog),
                                                report::Format::Json));
    }
}
BENCHMARK(BM_ReproduceAndRender);

void BM_CatalogSerializeReload(benchmark::State& state) {
    const std::string doc = Catalog::builtin().serialize();
    for (auto _ : state) {
        benchmark::DoNotOptimize(Catalog::from_json_text(doc));
    }
}
BENCHMARK(BM_CatalogSerializeReload);

}  // namespace

BENCHMARK_MAIN();
