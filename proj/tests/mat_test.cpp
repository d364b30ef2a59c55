#include <doctest.h>

#include <random>

#include "cosetlab/mat/census.hpp"
#include "cosetlab/mat/classical.hpp"
#include "cosetlab/mat/elements.hpp"
#include "cosetlab/mat/flags.hpp"
#include "cosetlab/mat/jordan.hpp"
#include "cosetlab/mat/numbered_set.hpp"

using namespace cosetlab;
using namespace cosetlab::mat;

namespace {

GroupSpec spec(Family f, int n, int q, ActionKind a = ActionKind::vectors_nonzero) { return GroupSpec{f, n, q, a}; }

Matrix random_matrix(int p, int n, std::mt19937_64& rng) {
    Matrix m(p, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m.set(r, c, static_cast<long long>(rng() % static_cast<unsigned>(p)));
    return m;
}

}  // namespace

TEST_SUITE("mat") {

TEST_CASE("order formula matches tabulated orders") {
    CHECK(group_order_formula(spec(Family::SL, 2, 3)) == 24);
    CHECK(group_order_formula(spec(Family::SL, 3, 2)) == 168);
    CHECK(group_order_formula(spec(Family::GL, 2, 3)) == 48);
    CHECK(group_order_formula(spec(Family::SL, 4, 2)) == 20160);
    CHECK(group_order_formula(spec(Family::Sp, 4, 2)) == 720);
    CHECK(group_order_formula(spec(Family::Sp, 6, 2)) == 1451520);
    CHECK(group_order_formula(spec(Family::GO_plus, 4, 2)) == 72);
    CHECK(group_order_formula(spec(Family::GO_minus, 4, 2)) == 120);
    CHECK(group_order_formula(spec(Family::GO_plus, 6, 2)) == 40320);
    CHECK(group_order_formula(spec(Family::GO_plus, 8, 2)) == 348364800);
    CHECK(group_order_formula(spec(Family::SL_dual_ext, 4, 2, ActionKind::vectors_plus_covectors)) == 40320);
    CHECK(group_order_formula(spec(Family::SL_dual_ext, 3, 2, ActionKind::vectors_plus_covectors)) == 336);
}

TEST_CASE("constructed groups have the formula order and preserve their form") {
    const GroupSpec specs[] = {spec(Family::SL, 3, 3),       spec(Family::GL, 3, 2),      spec(Family::Sp, 4, 3),
                               spec(Family::GO_plus, 6, 3),  spec(Family::GO_minus, 6, 2), spec(Family::SO_odd, 5, 3),
                               spec(Family::GO_minus, 4, 3), spec(Family::Sp, 6, 2)};
    for (const auto& s : specs) {
        CAPTURE(s.str());
        auto g = classical_group(s, 1);
        CHECK(g.group->order() == group_order_formula(s));
        for (const auto& x : g.generators) {
            if (g.form.kind != FormKind::none) CHECK(g.form.preserved_by(x));
            if (s.family == Family::SL || s.family == Family::Sp) CHECK(x.determinant() == 1);
        }
    }
}

TEST_CASE("seeds change generators but not the group") {
    auto a = classical_group(spec(Family::Sp, 4, 2), 0);
    auto b = classical_group(spec(Family::Sp, 4, 2), 7);
    CHECK(a.group->order() == b.group->order());
    for (const auto& x : b.generators) CHECK(a.contains(x));
}

TEST_CASE("matrix arithmetic") {
    std::mt19937_64 rng(3);
    for (int p : {2, 3, 5})
        for (int trial = 0; trial < 20; ++trial) {
            auto a = random_matrix(p, 4, rng);
            auto b = random_matrix(p, 4, rng);
            CHECK((a * b).determinant() == (a.determinant() * b.determinant()) % p);
            CHECK((a * b).transpose() == b.transpose() * a.transpose());
            if (a.determinant() != 0) {
                CHECK((a * a.inverse()).is_identity());
                CHECK(a.pow(-3) == a.inverse().pow(3));
            }
        }
}

TEST_CASE("jordan types") {
    auto j = jordan_block(2, 4);
    CHECK(jordan_type(j).str() == "4");
    CHECK(element_order(j) == 4);
    auto x = direct_sum(jordan_block(2, 4), direct_sum(jordan_block(2, 2), jordan_block(2, 2)));
    CHECK(jordan_type(x).str() == "4.2^2");
    CHECK(JordanType::parse("4.2^2") == jordan_type(x));
    CHECK(JordanType::parse("2.1^6").dim() == 8);
    CHECK_THROWS(jordan_type(Matrix::diagonal(3, {1, 2, 1})));
}

TEST_CASE("square-zero census counts the alternating involutions of GO8+(2)") {
    auto f = standard_form(FormKind::quadratic_plus, 2, 8);
    CHECK(count_square_zero_isometries(f, 2) == 1575);
    CHECK(count_square_zero_isometries(f, 4) == 7560);
    CHECK(count_totally_singular_subspaces(f, 1) == 135);
}

TEST_CASE("element constructors land in the right class") {
    auto go = classical_group(spec(Family::GO_plus, 8, 2));
    auto tv = element_constructor("transvection", {}, go);
    CHECK((tv - Matrix::identity(2, 8)).rank() == 1);
    CHECK(go.contains(tv));
    CHECK_FALSE(go.inner(tv));
    auto a2 = element_constructor("alt_involution", {{"rank", 2LL}}, go);
    CHECK((a2 * a2).is_identity());
    CHECK((a2 - Matrix::identity(2, 8)).rank() == 2);
    CHECK(go.inner(a2));
    CHECK_THROWS_AS(element_constructor("alt_involution", {{"rank", 3LL}}, go), Unsupported);
    CHECK_THROWS(element_constructor("no_such_kind", {}, go));
}

TEST_CASE("nonsingular points") {
    auto f = standard_form(FormKind::quadratic_plus, 2, 6);
    auto ns = nonsingular_points(f);
    // 2^5 - 2^2 nonsingular vectors in O6+(2)
    CHECK(ns.size() == 28);
    for (std::size_t i = 0; i < ns.size(); ++i) CHECK(ns.norm(i) == 1);
}

TEST_CASE("common flags over GF(p) and over the closure") {
    auto id = Matrix::identity(2, 3);
    auto u = Matrix::from_rows(2, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
    auto v = Matrix::from_rows(2, {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}});
    CHECK(common_flag_exists({u, v}));
    CHECK(common_flag_over_closure({u, v}));
    // An element of order 7 fixes no line over GF(2) but is diagonalizable over GF(8).
    auto s = Matrix::from_rows(2, {{0, 1, 0}, {0, 0, 1}, {1, 1, 0}});
    CHECK(element_order(s) == 7);
    CHECK_FALSE(common_flag_exists({s}));
    CHECK(common_flag_over_closure({s, s.pow(3)}));
    // A transvection and its transpose generate SL2 on a 2-space; no common flag anywhere.
    auto t = Matrix::from_rows(2, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK_FALSE(common_flag_over_closure({t, t.transpose()}));
    CHECK_FALSE(common_flag_exists({t, t.transpose()}));
    CHECK(common_flag_over_closure({id}));
}

TEST_CASE("a common GF(p) flag implies one over the closure") {
    auto g = classical_group(spec(Family::SL, 3, 3));
    perm::ProductReplacement<MatrixAction> pr(g.group->action(), g.generators, 1);
    for (int i = 0; i < 300; ++i) {
        auto x = pr.next();
        auto y = pr.next();
        if (common_flag_exists({x, y})) CHECK(common_flag_over_closure({x, y}));
    }
}

}
