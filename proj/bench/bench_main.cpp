#include <benchmark/benchmark.h>

#include "dpva/catalog.hpp"
#include "dpva/double_bracket.hpp"
#include "dpva/h0.hpp"
#include "dpva/rep_algebra.hpp"

using namespace dpva;

namespace {

Exec mode(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }

void label(benchmark::State& st) { st.SetLabel(st.range(0) ? "parallel" : "serial"); }

void BM_jacobi(benchmark::State& st) {
    DPAlgebra A = make_ku(2, 2, 2);
    for (auto _ : st) benchmark::DoNotOptimize(db_check_jacobi(A, 0, mode(st)));
    label(st);
}

void BM_face_front(benchmark::State& st) {
    DPAlgebra A = make_qpq(2, 2, 2);
    DimVector d{{2, 1}};
    for (auto _ : st) benchmark::DoNotOptimize(face_front_check(A, d, 3, mode(st)));
    label(st);
}

void BM_lemma(benchmark::State& st) {
    DPAlgebra A = make_ku(1, 0, 0);
    DimVector d{{2}};
    for (auto _ : st) benchmark::DoNotOptimize(lemma_identities_check(A, d, 2, 0, 50, mode(st)));
    label(st);
}

}  // namespace

BENCHMARK(BM_jacobi)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_face_front)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_lemma)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
