#include <benchmark/benchmark.h>

#include "bfk/complexes.hpp"
#include "bfk/drivers.hpp"
#include "bfk/hfside.hpp"
#include "bfk/khside.hpp"
#include "bfk/specseq.hpp"
#include "bfk/tensor.hpp"
#include "bfk/transfer.hpp"

using namespace bfk;

static void BM_ZigzagTable(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        ZigzagAlgebra A(m);
        benchmark::DoNotOptimize(A.dim());
    }
}
BENCHMARK(BM_ZigzagTable)->Arg(3)->Arg(5);

static void BM_BuildHomAlgebra(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        AInfAlgebra B = build_B(m);
        benchmark::DoNotOptimize(B.space.dim());
    }
}
BENCHMARK(BM_BuildHomAlgebra)->Arg(2)->Arg(4);

static void BM_TransferAlgebra(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    AInfAlgebra B = build_B(m);
    SplittingData S = bkh_prescribed_splitting(B, m);
    for (auto _ : state) {
        AInfAlgebra H = transfer_algebra(B, S, 4);
        benchmark::DoNotOptimize(H.mult.size());
    }
}
BENCHMARK(BM_TransferAlgebra)->Arg(2)->Arg(3);

static void BM_WordBimodule(benchmark::State& state) {
    int m = 2;
    auto A = bhf(m);
    BraidWord w = parse_braid("1 2 1", m);
    for (auto _ : state) {
        AInfBimodule M = braid_bimodule_hf(m, w, A);
        benchmark::DoNotOptimize(M.space.dim());
    }
}
BENCHMARK(BM_WordBimodule);

static void BM_RelationCheck(benchmark::State& state) {
    int m = 2;
    auto A = bhf(m);
    AInfBimodule M = braid_bimodule_hf(m, parse_braid("1 -2", m), A);
    CheckOptions opt{4, false, true, 4};
    for (auto _ : state) {
        CheckReport rep = check_bimodule(M, opt);
        benchmark::DoNotOptimize(rep.instances);
    }
}
BENCHMARK(BM_RelationCheck);

static void BM_GrCompare(benchmark::State& state) {
    BraidWord w = parse_braid("1 2", 2);
    for (auto _ : state) {
        GrCompareResult res = gr_compare(2, w);
        benchmark::DoNotOptimize(res.pass);
    }
}
BENCHMARK(BM_GrCompare);

static void BM_SpectralSequence(benchmark::State& state) {
    auto A = bhf(2);
    AInfBimodule M = braid_bimodule_hf(2, parse_braid("1 -1", 2), A);
    for (auto _ : state) {
        auto pages = spectral_sequence_by_idem(M);
        benchmark::DoNotOptimize(pages.size());
    }
}
BENCHMARK(BM_SpectralSequence);

BENCHMARK_MAIN();
