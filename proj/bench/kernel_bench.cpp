// Serial reference kernels against their OpenMP versions.
// Arguments: /exec/threads with exec 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include "cosetlab/classlab/decompose.hpp"
#include "cosetlab/classlab/gf2_census.hpp"
#include "cosetlab/kernels/bfs.hpp"
#include "cosetlab/kernels/exec.hpp"
#include "cosetlab/mat/classical.hpp"
#include "cosetlab/mat/elements.hpp"

using namespace cosetlab;

namespace {

kernels::Exec exec_of(const benchmark::State& st) {
    return st.range(0) == 0 ? kernels::Exec::serial : kernels::Exec::parallel;
}

void label(benchmark::State& st) {
    st.SetLabel(kernels::to_string(exec_of(st)) + " t=" + std::to_string(st.range(1)));
    kernels::set_threads(static_cast<int>(st.range(1)));
}

const mat::ClassicalGroup& go8_2() {
    static const auto g =
        mat::classical_group(mat::GroupSpec{mat::Family::GO_plus, 8, 2, mat::ActionKind::vectors_nonzero});
    return g;
}

const mat::ClassicalGroup& go6_2() {
    static const auto g =
        mat::classical_group(mat::GroupSpec{mat::Family::GO_plus, 6, 2, mat::ActionKind::vectors_nonzero});
    return g;
}

void BM_TupleOrbit(benchmark::State& st) {
    label(st);
    auto c = perm::Permutation::from_cycles(14, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13}});
    auto t = perm::Permutation::from_cycles(14, {{0, 1}});
    std::vector<perm::Permutation> gens{c, t};
    std::vector<kernels::KeyWord> root{0, 1, 2, 3};
    auto expand = [&](const kernels::KeyWord* key, kernels::KeyWord* out) {
        for (std::size_t s = 0; s < gens.size(); ++s)
            for (std::size_t i = 0; i < 4; ++i) out[s * 4 + i] = gens[s][key[i]];
    };
    for (auto _ : st) {
        auto tree = kernels::bfs_orbit(root.data(), 4, gens.size(), expand, 1 << 22, exec_of(st));
        benchmark::DoNotOptimize(tree.keys.size());
    }
}

void BM_ClassEnumeration(benchmark::State& st) {
    label(st);
    const auto& cg = go8_2();
    auto x = mat::element_constructor("alt_involution", {{"rank", 4LL}}, cg);
    classlab::ClassOptions<mat::MatrixAction> o;
    o.exec = exec_of(st);
    for (auto _ : st) {
        auto h = classlab::enumerate_class(cg.group, x, o);
        benchmark::DoNotOptimize(h->size());
    }
}

void BM_Decompose(benchmark::State& st) {
    label(st);
    const auto& cg = go8_2();
    auto tv = mat::element_constructor("transvection", {}, cg);
    auto a4 = mat::element_constructor("alt_involution", {{"rank", 4LL}}, cg);
    for (auto _ : st) {
        classlab::ClassRegistry<mat::MatrixAction> reg(cg.group, {}, 0, exec_of(st));
        auto d = classlab::decompose(reg, *reg.enumerate(tv), *reg.enumerate(a4), classlab::ProductKind::product);
        benchmark::DoNotOptimize(d.rows.size());
    }
}

void BM_Census(benchmark::State& st) {
    label(st);
    const auto& g = *go6_2().group;
    for (auto _ : st) {
        auto c = classlab::two_element_census(g, classlab::Coset::any, 0, 0, exec_of(st));
        benchmark::DoNotOptimize(c.scanned);
    }
}

void args(benchmark::internal::Benchmark* b) {
    b->Args({0, 1});
    for (int t : {1, 2, 4}) b->Args({1, t});
    b->Unit(benchmark::kMillisecond)->UseRealTime();
}

}  // namespace

BENCHMARK(BM_TupleOrbit)->Apply(args);
BENCHMARK(BM_ClassEnumeration)->Apply(args);
BENCHMARK(BM_Decompose)->Apply(args);
BENCHMARK(BM_Census)->Apply(args);

BENCHMARK_MAIN();
