#include <benchmark/benchmark.h>

#include "supermod/hwmod.hpp"
#include "supermod/pbw.hpp"
#include "supermod/possys.hpp"
#include "supermod/realize.hpp"
#include "supermod/weylgroup.hpp"

using namespace supermod;

static void BM_BuildRootSystem_B33(benchmark::State& state) {
    for (auto _ : state) {
        auto sys = build_root_system(Family::B(3, 3));
        benchmark::DoNotOptimize(sys.roots.size());
    }
}
BENCHMARK(BM_BuildRootSystem_B33);

static void BM_RealizeAlgebra_D33(benchmark::State& state) {
    for (auto _ : state) {
        auto alg = realize_algebra(Family::D(3, 3));
        benchmark::DoNotOptimize(alg.dim());
    }
}
BENCHMARK(BM_RealizeAlgebra_D33);

static void BM_StructureConstants_A21(benchmark::State& state) {
    auto alg = realize_algebra(Family::A(2, 1));
    for (auto _ : state) {
        auto sc = structure_constants(alg);
        benchmark::DoNotOptimize(sc.dim);
    }
}
BENCHMARK(BM_StructureConstants_A21);

static void BM_CharacterFormula_B21_depth5(benchmark::State& state) {
    auto pair = build_hermitian_pair(Family::B(2, 1), "so2");
    auto p = standard_admissible_system(pair);
    Weight lambda{rat(0), rat(1), rat(0)};
    HighestWeight hw(pair, p, lambda);
    for (auto _ : state) {
        auto ch = character_formula(hw, 5);
        benchmark::DoNotOptimize(ch.terms.size());
    }
}
BENCHMARK(BM_CharacterFormula_B21_depth5);

static void BM_CharacterBruteforce_B21_depth5(benchmark::State& state) {
    auto pair = build_hermitian_pair(Family::B(2, 1), "so2");
    auto p = standard_admissible_system(pair);
    Weight lambda{rat(0), rat(1), rat(0)};
    HighestWeight hw(pair, p, lambda);
    for (auto _ : state) {
        auto ch = character_bruteforce(hw, 5);
        benchmark::DoNotOptimize(ch.terms.size());
    }
}
BENCHMARK(BM_CharacterBruteforce_B21_depth5);

static void BM_SingularScan_B02_depth6(benchmark::State& state) {
    auto pair = build_hermitian_pair(Family::B(0, 2), "sp");
    auto p = standard_admissible_system(pair);
    HighestWeight hw(pair, p, Weight{rat(-2), rat(-2)});
    auto model = shared_algebra_model(pair.family);
    for (auto _ : state) {
        ModuleSlice slice = build_module_slice(model, hw, 6);
        auto svs = find_singular_vectors(slice, hw);
        benchmark::DoNotOptimize(svs.size());
    }
}
BENCHMARK(BM_SingularScan_B02_depth6);

static void BM_EnumerateAdmissible_B21(benchmark::State& state) {
    auto pair = build_hermitian_pair(Family::B(2, 1), "so2");
    for (auto _ : state) {
        auto all = enumerate_admissible(pair);
        benchmark::DoNotOptimize(all.size());
    }
}
BENCHMARK(BM_EnumerateAdmissible_B21);

static void BM_WeylGroup_F4_even(benchmark::State& state) {
    auto sys = build_root_system(Family::F4());
    for (auto _ : state) {
        auto w = even_weyl_group(sys);
        benchmark::DoNotOptimize(w.order());
    }
}
BENCHMARK(BM_WeylGroup_F4_even);

BENCHMARK_MAIN();
