#include <doctest.h>

#include <set>

#include "cosetlab/classlab/decompose.hpp"
#include "cosetlab/classlab/gf2_census.hpp"
#include "cosetlab/kernels/gf2x8.hpp"
#include "cosetlab/mat/classical.hpp"
#include "cosetlab/mat/elements.hpp"
#include "cosetlab/mat/jordan.hpp"

using namespace cosetlab;
using namespace cosetlab::classlab;
using mat::Matrix;
using mat::MatrixAction;

namespace {

std::shared_ptr<const mat::MatrixGroup> matrix_group(mat::Family f, int n, int q) {
    return mat::classical_group(mat::GroupSpec{f, n, q, mat::ActionKind::vectors_nonzero}).group;
}

std::shared_ptr<const perm::PermGroup> s5() {
    return std::make_shared<const perm::PermGroup>(perm::build_bsgs(
        {perm::Permutation::from_cycles(5, {{0, 1, 2, 3, 4}}), perm::Permutation::from_cycles(5, {{0, 1}})},
        std::nullopt, 0));
}

template <GroupAction A>
void check_class_equation(ClassRegistry<A>& reg, std::size_t expected_classes) {
    auto all = all_classes(reg);
    CHECK(all.size() == expected_classes);
    std::uint64_t sum = 0;
    for (const auto& c : all) {
        sum += c->size();
        CHECK(c->size() * c->centralizer_order() == reg.group().order());
        for (const auto& z : c->centralizer_generators())
            CHECK(reg.group().action().equal(
                reg.group().action().multiply(z, c->representative()),
                reg.group().action().multiply(c->representative(), z)));
    }
    CHECK(sum == reg.group().order());
}

// Every decomposition against the all-pairs count, in both fixing modes.
template <GroupAction A>
void check_all_decompositions(ClassRegistry<A>& reg) {
    auto all = all_classes(reg);
    for (const auto& C : all)
        for (const auto& D : all)
            for (auto kind : {ProductKind::product, ProductKind::commutator}) {
                auto d = decompose(reg, *C, *D, kind, FixSide::c);
                auto e = decompose(reg, *C, *D, kind, FixSide::d);
                CHECK(d.total() == D->size());
                CHECK(e.total() == D->size());
                auto bf = decompose_bruteforce(reg, *C, *D, kind);
                REQUIRE(bf.size() == d.rows.size());
                for (std::size_t i = 0; i < d.rows.size(); ++i) {
                    CHECK(bf.at(d.rows[i].class_index) == C->size() * d.rows[i].multiplicity);
                    CHECK(d.rows[i].class_index == e.rows[i].class_index);
                    CHECK(d.rows[i].multiplicity == e.rows[i].multiplicity);
                    const auto& a = reg.group().action();
                    CHECK(reg.at(d.rows[i].class_index).contains(combine(a, kind, d.rows[i].witness_x, d.rows[i].witness_y)));
                }
            }
}

}  // namespace

TEST_SUITE("classlab") {

TEST_CASE("class equation") {
    ClassRegistry<MatrixAction> sl32(matrix_group(mat::Family::SL, 3, 2));
    check_class_equation(sl32, 6);
    ClassRegistry<MatrixAction> sp42(matrix_group(mat::Family::Sp, 4, 2));
    check_class_equation(sp42, 11);
    ClassRegistry<perm::PermAction> sym5(s5());
    check_class_equation(sym5, 7);
    ClassRegistry<MatrixAction> sl23(matrix_group(mat::Family::SL, 2, 3));
    check_class_equation(sl23, 7);
}

TEST_CASE("decompositions agree with brute force") {
    ClassRegistry<MatrixAction> sl32(matrix_group(mat::Family::SL, 3, 2));
    check_all_decompositions(sl32);
    ClassRegistry<perm::PermAction> sym5(s5());
    check_all_decompositions(sym5);
    ClassRegistry<MatrixAction> gl23(matrix_group(mat::Family::GL, 2, 3));
    check_all_decompositions(gl23);
}

TEST_CASE("centralizer orbits agree with orbits on pairs") {
    ClassRegistry<MatrixAction> reg(matrix_group(mat::Family::Sp, 4, 2));
    auto all = all_classes(reg);
    for (const auto& C : all)
        for (const auto& D : all) {
            auto fast = orbits_on_pairs(*C, *D);
            auto slow = pair_orbits_bruteforce(*C, *D);
            REQUIRE(fast.count() == slow.count());
            auto scaled = fast.sizes;
            for (auto& s : scaled) s *= C->size();
            std::sort(scaled.begin(), scaled.end());
            CHECK(scaled == slow.sizes);
        }
}

TEST_CASE("serial and parallel class enumeration agree") {
    auto cg = mat::classical_group(mat::GroupSpec{mat::Family::GO_plus, 8, 2, mat::ActionKind::vectors_nonzero});
    auto x = mat::element_constructor("alt_involution", {{"rank", 2LL}}, cg);
    ClassOptions<MatrixAction> o;
    o.exec = Exec::serial;
    auto a = enumerate_class(cg.group, x, o);
    o.exec = Exec::parallel;
    auto b = enumerate_class(cg.group, x, o);
    CHECK(a->size() == 1575);
    REQUIRE(b->size() == a->size());
    bool same = true;
    for (std::size_t i = 0; i < a->size(); ++i) same = same && a->element(i) == b->element(i);
    CHECK(same);
    CHECK(a->centralizer_order() == b->centralizer_order());
    auto tv = mat::element_constructor("transvection", {}, cg);
    ClassRegistry<MatrixAction> rs(cg.group, {}, 0, Exec::serial), rp(cg.group, {}, 0, Exec::parallel);
    auto ds = decompose(rs, *rs.enumerate(tv), *rs.enumerate(x), ProductKind::product);
    auto dp = decompose(rp, *rp.enumerate(tv), *rp.enumerate(x), ProductKind::product);
    REQUIRE(ds.rows.size() == dp.rows.size());
    for (std::size_t i = 0; i < ds.rows.size(); ++i) {
        CHECK(ds.rows[i].multiplicity == dp.rows[i].multiplicity);
        CHECK(ds.rows[i].witness_y == dp.rows[i].witness_y);
    }
}

TEST_CASE("class cap") {
    auto cg = mat::classical_group(mat::GroupSpec{mat::Family::GO_plus, 8, 2, mat::ActionKind::vectors_nonzero});
    auto x = mat::element_constructor("alt_involution", {{"rank", 4LL}}, cg);
    ClassRegistry<MatrixAction> reg(cg.group, Caps{1000, 20000});
    CHECK_THROWS_AS(reg.enumerate(x), CapExceeded);
}

TEST_CASE("conjugates share a fingerprint") {
    auto g = matrix_group(mat::Family::Sp, 4, 3);
    perm::ProductReplacement<MatrixAction> pr(g->action(), g->generators(), 9);
    for (int i = 0; i < 100; ++i) {
        auto x = pr.next(), t = pr.next();
        auto y = t.inverse() * x * t;
        CHECK(fingerprint(x).str() == fingerprint(y).str());
    }
}

TEST_CASE("GF(2) census equals the reference census") {
    auto g = matrix_group(mat::Family::GO_plus, 6, 2);
    for (auto coset : {Coset::any, Coset::inner, Coset::outer}) {
        auto ref = two_element_census_reference(*g, coset, 2, 5);
        for (int threads : {1, 3}) {
            kernels::set_threads(threads);
            auto par = two_element_census(*g, coset, 2, 5, Exec::parallel);
            CHECK(par.scanned == ref.scanned);
            CHECK(par.counts == ref.counts);
            CHECK(par.samples == ref.samples);
        }
        kernels::set_threads(0);
    }
    auto all = two_element_census(*g, Coset::any, 0, 0, Exec::serial);
    std::uint64_t two = 0;
    for (auto [code, n] : all.counts) two += n;
    // elements of 2-power order in S8, counted by cycle type
    CHECK(two == 11264);
    CHECK(jordan_code_string(422) == "4.2^2");
    CHECK(jordan_code_string(2111111) == "2.1^6");
}

TEST_CASE("elimination scan against direct products") {
    auto cg = mat::classical_group(mat::GroupSpec{mat::Family::GO_plus, 6, 2, mat::ActionKind::vectors_nonzero});
    auto tv = mat::element_constructor("transvection", {}, cg);
    ClassRegistry<MatrixAction> reg(cg.group);
    auto T = reg.enumerate(tv);
    std::vector<Matrix> xs;
    for (std::size_t i = 0; i < T->size(); ++i) xs.push_back(T->element(i));
    auto ser = non_two_product_scan(*cg.group, xs, Coset::inner, 4, Exec::serial);
    auto par = non_two_product_scan(*cg.group, xs, Coset::inner, 4, Exec::parallel);
    CHECK(ser.targets == par.targets);
    CHECK(ser.unresolved == par.unresolved);
    std::uint64_t targets = 0, unresolved = 0;
    perm::for_each_element(*cg.group, [&](const Matrix& y) {
        if (!cg.inner(y) || mat::element_order(y) != 4) return;
        ++targets;
        bool found = false;
        for (const auto& x : xs) found = found || !mat::is_unipotent(x * y);
        unresolved += !found;
    });
    CHECK(ser.targets == targets);
    CHECK(ser.unresolved == unresolved);
}

}
