#include <benchmark/benchmark.h>

#include "nsg/code_tables.hpp"
#include "nsg/feng_rao.hpp"
#include "nsg/suzuki.hpp"

namespace {

void BM_NonrationalConstruction(benchmark::State& state) {
    auto p = nsg::suzuki::SuzukiParams::from_q(state.range(0));
    for (auto _ : state) {
        auto s = nsg::suzuki::nonrational_point_semigroup(p);
        benchmark::DoNotOptimize(s.conductor());
    }
}
BENCHMARK(BM_NonrationalConstruction)->Arg(8)->Arg(32)->Arg(128);

void BM_VerifyStructure(benchmark::State& state) {
    auto p = nsg::suzuki::SuzukiParams::from_q(state.range(0));
    for (auto _ : state) {
        auto report = nsg::suzuki::verify_structure(p);
        benchmark::DoNotOptimize(report.all_passed());
    }
}
BENCHMARK(BM_VerifyStructure)->Arg(8)->Arg(32)->Arg(128);

void BM_OrderBoundTable(benchmark::State& state) {
    auto p = nsg::suzuki::SuzukiParams::from_q(state.range(0));
    auto s = nsg::suzuki::nonrational_point_semigroup(p);
    for (auto _ : state) {
        auto table = nsg::fengrao::build_table(s);
        benchmark::DoNotOptimize(table.d_ord_values.back());
    }
}
BENCHMARK(BM_OrderBoundTable)->Arg(8)->Arg(32)->Arg(128);

void BM_Compare(benchmark::State& state) {
    auto p = nsg::suzuki::SuzukiParams::from_q(state.range(0));
    for (auto _ : state) {
        auto cmp = nsg::tables::compare(p);
        benchmark::DoNotOptimize(cmp.records.size());
    }
}
BENCHMARK(BM_Compare)->Arg(8)->Arg(32)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
