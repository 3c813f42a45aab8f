// Serial reference vs OpenMP kernels. Set OMP_NUM_THREADS to compare thread counts.
#include <benchmark/benchmark.h>

#include "lsd/dl_count.hpp"
#include "lsd/kottwitz.hpp"
#include "lsd/lattice_oracle.hpp"
#include "lsd/root_datum.hpp"

namespace {

lsd::AdlvParams central_gl2() {
    lsd::AdlvParams prm;
    prm.p = 3;
    prm.n = 2;
    prm.window = 2;
    prm.mu = {1, 1};
    prm.b = lsd::christoffel_rep(3, {{1, 1, 2}});
    return prm;
}

template <auto Fn>
void BM_adlv(benchmark::State& st) {
    const lsd::AdlvParams prm = central_gl2();
    for (auto _ : st) benchmark::DoNotOptimize(Fn(prm).points.size());
}

template <auto Fn>
void BM_dl(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(Fn(lsd::DlGroup::SO5, 2, 2).total_flags);
}

template <auto Fn>
void BM_weyl(benchmark::State& st) {
    const lsd::RootDatum rd = lsd::orthogonal_datum(static_cast<int>(st.range(0)), true);
    for (auto _ : st) benchmark::DoNotOptimize(Fn(rd).size());
}

template <auto Fn>
void BM_bgmu(benchmark::State& st) {
    const lsd::RootDatum rd = lsd::orthogonal_datum(static_cast<int>(st.range(0)), true);
    const lsd::IVec mu = lsd::orthogonal_mu(rd);
    for (auto _ : st) benchmark::DoNotOptimize(Fn(rd, mu).classes.size());
}

}  // namespace

BENCHMARK(BM_adlv<lsd::enumerate_adlv_serial>)->Name("adlv/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_adlv<lsd::enumerate_adlv>)->Name("adlv/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dl<lsd::dl_table_serial>)->Name("dl_count/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dl<lsd::dl_table>)->Name("dl_count/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_weyl<lsd::weyl_orbit_regular_serial>)->Name("weyl_bfs/serial")->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_weyl<lsd::weyl_orbit_regular>)->Name("weyl_bfs/omp")->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bgmu<lsd::enumerate_bgmu_serial>)->Name("bgmu/serial")->Arg(12)->Arg(19)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bgmu<lsd::enumerate_bgmu>)->Name("bgmu/omp")->Arg(12)->Arg(19)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
