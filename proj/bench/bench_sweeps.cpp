#include "gcn/dcoeff.hpp"
#include "gcn/reduced.hpp"
#include "gcn/subalg.hpp"

#include <benchmark/benchmark.h>

using namespace gcn;

namespace {

Exec mode(const benchmark::State& st) { return st.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

void label(benchmark::State& st)
{
    st.SetLabel(st.range(0) == 0 ? "serial" : "parallel x" + std::to_string(max_threads()));
}

void BM_Closure(benchmark::State& st)
{
    auto spec = SubalgebraSpec::star(Sign::Plus, 1, Antiinvolution::transpose(2));
    auto set = spanning_set(spec, 4);
    for (auto _ : st)
        benchmark::DoNotOptimize(verify_closure_of(spec, set, mode(st)));
    label(st);
}
BENCHMARK(BM_Closure)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& st)
{
    for (auto _ : st)
        benchmark::DoNotOptimize(oracle_sweep(4, var(Var::S), mode(st)));
    label(st);
}
BENCHMARK(BM_Oracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_DTable(benchmark::State& st)
{
    for (auto _ : st)
        benchmark::DoNotOptimize(d_table(8, mode(st)));
    label(st);
}
BENCHMARK(BM_DTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
