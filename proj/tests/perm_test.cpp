#include <doctest.h>

#include <random>
#include <set>

#include "cosetlab/perm/enumerate.hpp"
#include "cosetlab/perm/group.hpp"

using namespace cosetlab;
using namespace cosetlab::perm;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> cycles) { return Permutation::from_cycles(n, cycles); }

// Closure of the generators by breadth-first multiplication.
std::set<Permutation> closure(const std::vector<Permutation>& gens) {
    std::set<Permutation> seen{Permutation::identity(gens[0].degree())};
    std::vector<Permutation> todo(seen.begin(), seen.end());
    while (!todo.empty()) {
        auto g = todo.back();
        todo.pop_back();
        for (const auto& s : gens) {
            auto h = g * s;
            if (seen.insert(h).second) todo.push_back(h);
        }
    }
    return seen;
}

Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
    std::vector<Point> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Point>(i);
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation(v);
}

}  // namespace

TEST_SUITE("perm") {

TEST_CASE("composition reads left to right") {
    auto a = cyc(3, {{0, 1}});
    auto b = cyc(3, {{1, 2}});
    // a then b: 0 -> 1 -> 2
    CHECK((a * b)[0] == 2);
    CHECK((a * b).to_cycle_string() == "(1,3,2)");
    CHECK(power(a * b, 3).is_identity());
    CHECK(power(a * b, -1) == (a * b).inverse());
}

TEST_CASE("invalid images are rejected") {
    CHECK_THROWS(Permutation(std::vector<Point>{0, 0, 1}));
    CHECK_THROWS(Permutation(std::vector<Point>{0, 3, 1}));
}

TEST_CASE("symmetric and alternating group orders") {
    for (std::size_t n = 2; n <= 9; ++n) {
        std::vector<Point> c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<Point>(i);
        auto g = build_bsgs({cyc(n, {{0, 1}}), cyc(n, {c})}, std::nullopt, 0);
        std::uint64_t f = 1;
        for (std::size_t i = 2; i <= n; ++i) f *= i;
        CHECK(g.order() == f);
    }
    auto a7 = build_bsgs({cyc(7, {{0, 1, 2}}), cyc(7, {{0, 1, 2, 3, 4, 5, 6}})}, std::nullopt, 3);
    CHECK(a7.order() == 2520);
    CHECK_FALSE(a7.contains(cyc(7, {{0, 1}})));
    CHECK(a7.contains(cyc(7, {{0, 1}, {2, 3}})));
}

TEST_CASE("order and membership agree with closure") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 12; ++trial) {
        std::size_t n = 5 + trial % 3;
        std::vector<Permutation> gens{random_perm(n, rng)};
        if (trial % 2) gens.push_back(random_perm(n, rng));
        auto all = closure(gens);
        auto g = build_bsgs(gens, std::nullopt, static_cast<std::uint64_t>(trial));
        CHECK(g.order() == all.size());
        for (int k = 0; k < 50; ++k) {
            auto x = random_perm(n, rng);
            CHECK(g.contains(x) == static_cast<bool>(all.count(x)));
        }
    }
}

TEST_CASE("for_each_element visits each element once") {
    auto g = build_bsgs({cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{1, 4}, {2, 3}})}, std::nullopt, 0);
    std::set<Permutation> seen;
    for_each_element(g, [&](const Permutation& x) { seen.insert(x); });
    CHECK(g.order() == 10);
    CHECK(seen.size() == 10);
}

TEST_CASE("known order mismatch is reported") {
    CHECK_THROWS_AS(build_bsgs({cyc(4, {{0, 1, 2, 3}})}, 8, 0), OrderMismatch);
}

TEST_CASE("degree mismatch is reported") {
    CHECK_THROWS_AS(build_bsgs({cyc(4, {{0, 1}}), cyc(5, {{0, 1}})}, std::nullopt, 0), DegreeMismatch);
}

TEST_CASE("random elements are members and the chain is seed independent") {
    std::vector<Permutation> gens{cyc(8, {{0, 1, 2, 3, 4, 5, 6}}), cyc(8, {{0, 7}, {1, 3}})};
    auto g0 = build_bsgs(gens, std::nullopt, 0);
    auto g1 = build_bsgs(gens, std::nullopt, 99);
    CHECK(g0.order() == g1.order());
    ProductReplacement<PermAction> pr(g0.action(), gens, 5);
    for (int i = 0; i < 200; ++i) {
        auto x = pr.next();
        CHECK(g0.contains(x));
        CHECK(g1.contains(x));
    }
}

TEST_CASE("restore rebuilds an identical chain") {
    std::vector<Permutation> gens{cyc(9, {{0, 1, 2}, {3, 4, 5}}), cyc(9, {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}}),
                                  cyc(9, {{0, 1}})};
    auto g = build_bsgs(gens, std::nullopt, 0);
    BuildOptions o;
    o.base_prefix = g.base();
    o.known_order = g.order();
    auto h = GroupBuilder<PermAction>::restore(g.action(), g.generators(), g.strong_generators(), o);
    CHECK(h.order() == g.order());
    CHECK(h.base() == g.base());
}

}
