#include <doctest.h>

#include <map>
#include <random>

#include "cosetlab/kernels/bfs.hpp"
#include "cosetlab/kernels/exec.hpp"
#include "cosetlab/kernels/gf2_scan.hpp"
#include "cosetlab/kernels/gf2x8.hpp"
#include "cosetlab/mat/classical.hpp"
#include "cosetlab/mat/jordan.hpp"

using namespace cosetlab;
using namespace cosetlab::kernels;

namespace {

// Orbit of a tuple of points under coordinatewise permutations.
BfsTree tuple_orbit(const std::vector<perm::Permutation>& gens, std::vector<KeyWord> root, Exec exec,
                    std::size_t cap = 1 << 20) {
    const std::size_t w = root.size();
    auto expand = [&](const KeyWord* key, KeyWord* out) {
        for (std::size_t s = 0; s < gens.size(); ++s)
            for (std::size_t i = 0; i < w; ++i) out[s * w + i] = gens[s][key[i]];
    };
    return bfs_orbit(root.data(), w, gens.size(), expand, cap, exec);
}

mat::Matrix random_gf2(int n, std::mt19937_64& rng) {
    mat::Matrix m(2, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.set(r, c, static_cast<long long>(rng() & 1));
    return m;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("key set keeps insertion order") {
    KeySet s(2);
    KeyWord a[2] = {1, 2}, b[2] = {2, 1};
    CHECK(s.insert(a) == std::pair<std::uint32_t, bool>{0, true});
    CHECK(s.insert(b) == std::pair<std::uint32_t, bool>{1, true});
    CHECK(s.insert(a) == std::pair<std::uint32_t, bool>{0, false});
    CHECK(s.find(b) == 1);
    KeyWord c[2] = {3, 3};
    CHECK(s.find(c) == kNoIndex);
}

TEST_CASE("parallel BFS equals the serial reference") {
    auto c = perm::Permutation::from_cycles(12, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}});
    auto t = perm::Permutation::from_cycles(12, {{0, 1}});
    for (int threads : {1, 2, 4}) {
        set_threads(threads);
        auto ser = tuple_orbit({c, t}, {0, 1, 2, 3}, Exec::serial);
        auto par = tuple_orbit({c, t}, {0, 1, 2, 3}, Exec::parallel);
        CHECK(ser.keys.size() == 12 * 11 * 10 * 9);
        REQUIRE(par.keys.size() == ser.keys.size());
        CHECK(par.parent == ser.parent);
        CHECK(par.via == ser.via);
        CHECK(par.depth == ser.depth);
        bool same = true;
        for (std::size_t i = 0; i < ser.keys.size(); ++i) same = same && ser.keys.key_copy(i) == par.keys.key_copy(i);
        CHECK(same);
    }
    set_threads(0);
}

TEST_CASE("BFS cap") {
    auto c = perm::Permutation::from_cycles(10, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}});
    auto t = perm::Permutation::from_cycles(10, {{0, 1}});
    CHECK_THROWS_AS(tuple_orbit({c, t}, {0, 1, 2}, Exec::parallel, 100), CapExceeded);
    CHECK_THROWS_AS(tuple_orbit({c, t}, {0, 1, 2}, Exec::serial, 100), CapExceeded);
}

TEST_CASE("orbit partition") {
    auto a = perm::Permutation::from_cycles(10, {{0, 1, 2}, {5, 6}});
    auto b = perm::Permutation::from_cycles(10, {{2, 3}});
    auto image = [&](std::uint32_t i, std::size_t s) { return s == 0 ? a[i] : b[i]; };
    auto ser = orbit_partition(10, 2, image, Exec::serial);
    auto par = orbit_partition(10, 2, image, Exec::parallel);
    CHECK(ser.sizes == std::vector<std::uint64_t>{1, 1, 1, 1, 2, 4});
    CHECK(par.sizes == ser.sizes);
    CHECK(par.label == ser.label);
    CHECK(ser.label[3] == 0);
    CHECK(ser.label[6] == 5);
}

TEST_CASE("packed GF(2) arithmetic matches generic matrices") {
    std::mt19937_64 rng(17);
    for (int n = 2; n <= 8; ++n)
        for (int trial = 0; trial < 40; ++trial) {
            auto a = random_gf2(n, rng);
            auto b = random_gf2(n, rng);
            CHECK(from_gf2(to_gf2(a), n) == a);
            CHECK(from_gf2(gf2_mul(to_gf2(a), to_gf2(b)), n) == a * b);
            CHECK(gf2_rank(to_gf2(a)) == a.rank());
            Gf2RightTable tab(to_gf2(b));
            CHECK(tab.apply(to_gf2(a)) == to_gf2(a * b));
        }
}

TEST_CASE("packed Jordan codes match the generic Jordan type") {
    auto g = mat::classical_group(mat::GroupSpec{mat::Family::GO_plus, 6, 2, mat::ActionKind::vectors_nonzero});
    perm::ProductReplacement<mat::MatrixAction> pr(g.group->action(), g.generators, 2);
    int unipotent = 0;
    for (int i = 0; i < 400; ++i) {
        auto x = pr.next();
        auto gx = to_gf2(x);
        bool two = mat::is_unipotent(x);
        CHECK(gf2_is_two_element(gx, 6) == two);
        if (!two) {
            CHECK(gf2_jordan_code(gx, 6) == 0);
            CHECK(gf2_two_power_order(gx, 6) == 0);
            continue;
        }
        ++unipotent;
        CHECK(gf2_jordan(gx, 6) == mat::jordan_type(x).parts);
        CHECK(gf2_two_power_order(gx, 6) == mat::element_order(x));
    }
    CHECK(unipotent > 0);
}

TEST_CASE("packed group scan equals the reference scan for any thread count") {
    auto g = mat::classical_group(mat::GroupSpec{mat::Family::GO_plus, 6, 2, mat::ActionKind::vectors_nonzero});
    auto L = gf2_levels(*g.group);
    using Acc = std::map<std::uint64_t, std::uint64_t>;
    auto visit = [](Acc& acc, Gf2x8 m) { ++acc[gf2_two_power_order(m, 6)]; };
    auto merge = [](Acc& into, const Acc& from) {
        for (auto [k, v] : from) into[k] += v;
    };
    auto ref = scan_gf2_reference(*g.group, Acc{}, visit);
    std::uint64_t total = 0;
    for (auto [k, v] : ref) total += v;
    CHECK(total == 40320);
    for (int threads : {1, 3}) {
        set_threads(threads);
        CHECK(scan_gf2(L, Exec::parallel, Acc{}, visit, merge) == ref);
        CHECK(scan_gf2(L, Exec::serial, Acc{}, visit, merge) == ref);
    }
    set_threads(0);
}

}
