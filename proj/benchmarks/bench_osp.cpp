#include "osp/pbw.hpp"
#include "osp/pvcrystal.hpp"
#include "osp/radverify.hpp"
#include "osp/verify.hpp"

#include <benchmark/benchmark.h>

using namespace osp;

namespace {

void BM_ScalarArithmetic(benchmark::State& state) {
    Scalar a = q_int(5, 2) / q_int(3);
    Scalar b = q_int_fact(4) + Scalar::q_pow(-3);
    for (auto _ : state) benchmark::DoNotOptimize((a * b + a) / (b - Scalar(1)));
}
BENCHMARK(BM_ScalarArithmetic);

void BM_Straighten(benchmark::State& state) {
    PBWAlgebra A(AlgebraType::parse("b", 2, 3));
    std::vector<int> seq;
    for (int k = A.n_rad() - 1; k >= 0; k -= 3) seq.push_back(k);
    for (auto _ : state) benchmark::DoNotOptimize(A.straighten(seq));
}
BENCHMARK(BM_Straighten);

void BM_VerifyCommutators(benchmark::State& state) {
    for (auto _ : state) {
        PBWAlgebra A(AlgebraType::parse("d", 3, 3));
        benchmark::DoNotOptimize(verify_commutators(A));
    }
}
BENCHMARK(BM_VerifyCommutators)->Unit(benchmark::kMillisecond);

void BM_VerifyLattice(benchmark::State& state) {
    for (auto _ : state) {
        PBWAlgebra A(AlgebraType::parse("b", 2, 2));
        benchmark::DoNotOptimize(verify_lattice(A, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_VerifyLattice)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_RadCrystalStrings(benchmark::State& state) {
    RadCrystal C(AlgebraType::parse("b", 3, 3));
    std::vector<RadArray> all = C.enumerate(8);
    for (auto _ : state)
        for (const RadArray& x : all)
            for (int i = 0; i < C.roots().N(); ++i) benchmark::DoNotOptimize(C.f(i, x));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(all.size()) * C.roots().N());
}
BENCHMARK(BM_RadCrystalStrings)->Unit(benchmark::kMillisecond);

void BM_BuildGraph(benchmark::State& state) {
    AlgebraType g = AlgebraType::parse("b", 2, 3);
    HookPartition lam = hook_partition({5, 3, 3, 2, 2}, 2, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(build_graph(g, lam, 3, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_BuildGraph)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Connectivity(benchmark::State& state) {
    AlgebraType g = AlgebraType::parse("c", 3, 3);
    HookPartition lam = hook_partition({2, 1, 1}, 3, 3);
    for (auto _ : state) benchmark::DoNotOptimize(check_connectivity(g, lam, 5, 4));
}
BENCHMARK(BM_Connectivity)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Branching(benchmark::State& state) {
    AlgebraType g = AlgebraType::parse("b", 2, 3);
    for (auto _ : state) benchmark::DoNotOptimize(l_branching(g, static_cast<int>(state.range(0)), 4));
}
BENCHMARK(BM_Branching)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_TableauCrystal(benchmark::State& state) {
    HookPartition lam = hook_partition({3, 2, 1}, 3, 3);
    for (auto _ : state) benchmark::DoNotOptimize(check_tableau_crystal(3, 3, lam));
}
BENCHMARK(BM_TableauCrystal)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
