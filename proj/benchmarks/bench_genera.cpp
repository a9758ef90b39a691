/// @file bench_genera.cpp
/// @brief Micro-benchmarks for the hot paths: nilpotent inversion, classical
///        index evaluation, loop-space towers, and equivariant characters.

#include <benchmark/benchmark.h>

#include <genera/equivariant.hpp>
#include <genera/genus.hpp>
#include <genera/nilpoly.hpp>
#include <genera/spaces.hpp>

using namespace genera;

// Inversion in the truncated cohomology ring of cp(6) — the primitive under
// every genus evaluation (Todd and L classes are x/(1 - e^{-x}) shapes).
static void BM_nil_invert_cp6(benchmark::State& state) {
    const SpaceModel M = cp(6);
    using NP = NilPoly<Rational>;
    const NP x = NP::generator(M.ring, 0);
    const NP f = NP::one(M.ring) + x;
    for (auto _ : state) {
        benchmark::DoNotOptimize(nil_invert(f));
    }
}
BENCHMARK(BM_nil_invert_cp6);

// Full classical index: multiplicative class assembly plus integration.
static void BM_index_todd_cp6(benchmark::State& state) {
    const SpaceModel M = cp(6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(index(M, GenusKind::todd()));
    }
}
BENCHMARK(BM_index_todd_cp6);

static void BM_index_chi_y_cp6(benchmark::State& state) {
    const SpaceModel M = cp(6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(index(M, GenusKind::chi_y()));
    }
}
BENCHMARK(BM_index_chi_y_cp6);

// Loop-space signature tower on K3 through q^Q: one Witten-style expansion
// per power of q, all rational arithmetic.
static void BM_loop_signature_k3(benchmark::State& state) {
    const SpaceModel M = hypersurface(2, 4);
    const int Q = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(loop_signature(M, Q));
    }
}
BENCHMARK(BM_loop_signature_k3)->Arg(2)->Arg(4)->Arg(6);

// Level-2 tower with cyclotomic coefficients on cp(3).
static void BM_level2_loop_cp3(benchmark::State& state) {
    const SpaceModel M = cp(3);
    const int Q = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(levelN_loop(M, 2, Q));
    }
}
BENCHMARK(BM_level2_loop_cp3)->Arg(2)->Arg(3);

// Equivariant signature character on cp(5): six fixed points, rational
// functions in the circle variable, exact cancellation at the end.
static void BM_equiv_signature_cp5(benchmark::State& state) {
    const CircleAction A = linear_cp_action({0, 1, 2, 3, 4, 5}, 1);
    const EquivSpec spec = EquivSpec::plain(GenusKind::signature());
    for (auto _ : state) {
        benchmark::DoNotOptimize(equiv_index(A, spec));
    }
}
BENCHMARK(BM_equiv_signature_cp5);

// The full rigidity verdict (character, normalization, comparison).
static void BM_rigidity_report_cp3_level2(benchmark::State& state) {
    const CircleAction A = linear_cp_action({0, 1, 2, 3}, 1);
    const EquivSpec spec = EquivSpec::level2_loop(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rigidity_report(A, spec));
    }
}
BENCHMARK(BM_rigidity_report_cp3_level2);

BENCHMARK_MAIN();
