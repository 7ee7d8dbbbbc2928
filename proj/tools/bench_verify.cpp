// Serial reference against the OpenMP kernels, one benchmark pair per suite.

#include <benchmark/benchmark.h>

#include "hk/verification.hpp"

namespace {

void run_suite(benchmark::State& state, const std::string& tag, hk::Exec exec) {
    const hk::Bounds bounds = hk::default_bounds(tag);
    long long instances = 0;
    for (auto _ : state) {
        const hk::Report r = hk::check_theorem(tag, bounds, exec);
        if (!r.ok()) state.SkipWithError(("failure: " + r.witness).c_str());
        instances = r.instances;
        benchmark::DoNotOptimize(instances);
    }
    state.counters["instances"] = static_cast<double>(instances);
}

}  // namespace

int main(int argc, char** argv) {
    for (const auto& tag : hk::theorem_tags()) {
        benchmark::RegisterBenchmark(("serial/" + tag).c_str(), run_suite, tag, hk::Exec::serial)
            ->Unit(benchmark::kMillisecond);
        benchmark::RegisterBenchmark(("parallel/" + tag).c_str(), run_suite, tag, hk::Exec::parallel)
            ->Unit(benchmark::kMillisecond);
    }
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
