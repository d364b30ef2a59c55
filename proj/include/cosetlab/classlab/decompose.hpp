#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "cosetlab/classlab/registry.hpp"

namespace cosetlab::classlab {

enum class ProductKind { product, commutator };
// Which class supplies the fixed element. The other class is scanned.
enum class FixSide { c, d, smaller };

template <GroupAction A>
struct Decomposition {
    using Element = typename A::Element;
    struct Row {
        std::size_t class_index = 0;
        Fingerprint fp;
        Element representative;
        std::uint64_t class_size = 0;
        // m_E = #{y in D : x y in E} for a fixed x in C (x^-1 y^-1 x y for commutators).
        std::uint64_t multiplicity = 0;
        Element witness_x, witness_y;
    };
    ProductKind kind = ProductKind::product;
    bool fixed_in_c = true;
    Element fixed;
    std::uint64_t c_size = 0, d_size = 0;
    std::vector<Row> rows;

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (const auto& r : rows) t += r.multiplicity;
        return t;
    }
};

template <GroupAction A>
typename A::Element combine(const A& a, ProductKind kind, const typename A::Element& x, const typename A::Element& y) {
    return kind == ProductKind::product ? a.multiply(x, y) : commutator(a, x, y);
}

// Classes met by C D (or [C, D]) with exact multiplicities. By conjugation
// invariance one fixed element of one class suffices; when D supplies it the
// counts are converted with |C| m_E = |D| m'_E.
template <GroupAction A>
Decomposition<A> decompose(ClassRegistry<A>& reg, const ClassHandle<A>& C, const ClassHandle<A>& D, ProductKind kind,
                           FixSide side = FixSide::c) {
    using Element = typename A::Element;
    const auto& a = reg.group().action();
    bool fix_c = side == FixSide::c || (side == FixSide::smaller && D.size() <= C.size());
    const ClassHandle<A>& scanned = fix_c ? D : C;
    Decomposition<A> out;
    out.kind = kind;
    out.fixed_in_c = fix_c;
    out.fixed = fix_c ? C.representative() : D.representative();
    out.c_size = C.size();
    out.d_size = D.size();

    struct Hit {
        std::uint64_t count = 0;
        Element wx, wy;
    };
    std::map<std::size_t, Hit> hits;
    constexpr std::size_t kChunk = 4096;
    const std::size_t n = scanned.size();
    std::vector<Element> z(std::min(n, kChunk)), other(std::min(n, kChunk));
    std::vector<Fingerprint> fp(std::min(n, kChunk));
    for (std::size_t c0 = 0; c0 < n; c0 += kChunk) {
        const std::size_t c1 = std::min(n, c0 + kChunk);
        const auto cnt = static_cast<std::int64_t>(c1 - c0);
        auto work = [&](std::int64_t i) {
            Element e = scanned.element(c0 + static_cast<std::size_t>(i));
            z[i] = fix_c ? combine(a, kind, out.fixed, e) : combine(a, kind, e, out.fixed);
            fp[i] = reg.fingerprint_of(z[i]);
            other[i] = std::move(e);
        };
        if (reg.exec() == Exec::parallel) {
            kernels::ErrorSlot err;
#pragma omp parallel for schedule(dynamic, 16)
            for (std::int64_t i = 0; i < cnt; ++i) err.run(i, [&] { work(i); });
            err.rethrow();
        } else {
            for (std::int64_t i = 0; i < cnt; ++i) work(i);
        }
        for (std::int64_t i = 0; i < cnt; ++i) {
            std::size_t cls = reg.classify(z[i], fp[i]);
            auto& h = hits[cls];
            if (h.count++ == 0) {
                h.wx = fix_c ? out.fixed : other[i];
                h.wy = fix_c ? other[i] : out.fixed;
            }
        }
    }
    for (auto& [cls, h] : hits) {
        typename Decomposition<A>::Row r;
        const auto& E = reg.at(cls);
        r.class_index = cls;
        r.fp = E.fingerprint();
        r.representative = E.representative();
        r.class_size = E.size();
        if (fix_c) {
            r.multiplicity = h.count;
        } else {
            std::uint64_t num = h.count * D.size();
            if (num % C.size() != 0) throw VerificationFailure("multiplicity conversion is not integral");
            r.multiplicity = num / C.size();
        }
        r.witness_x = h.wx;
        r.witness_y = h.wy;
        out.rows.push_back(std::move(r));
    }
    std::sort(out.rows.begin(), out.rows.end(),
              [&](const auto& x, const auto& y) { return class_less(reg.at(x.class_index), reg.at(y.class_index)); });
    return out;
}

template <GroupAction A>
Decomposition<A> class_product_decompose(ClassRegistry<A>& reg, const ClassHandle<A>& C, const ClassHandle<A>& D,
                                         FixSide side = FixSide::c) {
    return decompose(reg, C, D, ProductKind::product, side);
}

template <GroupAction A>
Decomposition<A> commutator_decompose(ClassRegistry<A>& reg, const ClassHandle<A>& C, const ClassHandle<A>& D,
                                      FixSide side = FixSide::c) {
    return decompose(reg, C, D, ProductKind::commutator, side);
}

// Oracle: every pair of C x D. Returns class index -> number of pairs.
template <GroupAction A>
std::map<std::size_t, std::uint64_t> decompose_bruteforce(ClassRegistry<A>& reg, const ClassHandle<A>& C,
                                                          const ClassHandle<A>& D, ProductKind kind) {
    const auto& a = reg.group().action();
    std::map<std::size_t, std::uint64_t> counts;
    std::vector<typename A::Element> ds;
    for (std::size_t j = 0; j < D.size(); ++j) ds.push_back(D.element(j));
    for (std::size_t i = 0; i < C.size(); ++i) {
        auto x = C.element(i);
        for (const auto& y : ds) {
            auto z = combine(a, kind, x, y);
            std::size_t c = reg.find_any(z);
            if (c == kNoIndex) c = reg.classify(z);
            ++counts[c];
        }
    }
    return counts;
}

// Orbits of the group generated by gens on the class D, acting by conjugation.
template <GroupAction A>
kernels::OrbitPartition orbits_on_class(const std::vector<typename A::Element>& gens, const ClassHandle<A>& D,
                                        Exec exec = Exec::parallel) {
    const auto& a = D.group().action();
    std::vector<typename A::Element> inv;
    for (const auto& c : gens) inv.push_back(a.inverse(c));
    auto image = [&](std::uint32_t i, std::size_t s) {
        auto j = D.index_of(conjugate(a, D.element(i), gens[s], inv[s]));
        if (j == kNoIndex) throw VerificationFailure("conjugation moved a class member out of the class");
        return j;
    };
    return kernels::orbit_partition(D.size(), gens.size(), image, exec);
}

// Orbits of C_G(x) on D; these biject with the G-orbits on x^G x D.
template <GroupAction A>
kernels::OrbitPartition orbits_on_pairs(const ClassHandle<A>& X, const ClassHandle<A>& D, Exec exec = Exec::parallel) {
    return orbits_on_class(X.centralizer_generators(), D, exec);
}

// Oracle: G-orbits on C x D under simultaneous conjugation.
template <GroupAction A>
kernels::OrbitPartition pair_orbits_bruteforce(const ClassHandle<A>& C, const ClassHandle<A>& D) {
    const auto& g = C.group();
    const auto& a = g.action();
    auto table = [&](const ClassHandle<A>& K, const typename A::Element& s, const typename A::Element& sinv) {
        std::vector<std::uint32_t> t(K.size());
        for (std::size_t i = 0; i < K.size(); ++i) t[i] = K.index_of(conjugate(a, K.element(i), s, sinv));
        return t;
    };
    std::vector<std::vector<std::uint32_t>> tc, td;
    for (const auto& s : g.generators()) {
        auto sinv = a.inverse(s);
        tc.push_back(table(C, s, sinv));
        td.push_back(table(D, s, sinv));
    }
    const std::size_t nd = D.size();
    return kernels::orbit_partition(
        C.size() * nd, tc.size(),
        [&](std::uint32_t p, std::size_t s) { return static_cast<std::uint32_t>(tc[s][p / nd] * nd + td[s][p % nd]); },
        Exec::serial);
}

// Orbits of permutations on {0..n-1}.
inline kernels::OrbitPartition orbit_lengths_on_set(const std::vector<perm::Permutation>& gens, std::size_t n) {
    for (const auto& g : gens)
        if (g.degree() != n) throw DegreeMismatch("orbit_lengths_on_set: generator acts on a different set");
    return kernels::orbit_partition(n, gens.size(), [&](std::uint32_t i, std::size_t s) { return gens[s][i]; },
                                    Exec::serial);
}

// Witness t with t^-1 a t = b, or nothing.
template <GroupAction A>
std::optional<typename A::Element> are_conjugate(std::shared_ptr<const perm::Group<A>> g, const typename A::Element& x,
                                                 const typename A::Element& y, const ClassOptions<A>& opt = {}) {
    if (!g->contains(x) || !g->contains(y)) throw NotInGroup("are_conjugate: element is not in the group");
    if (element_order(x) != element_order(y)) return std::nullopt;
    if (!(fingerprint_in<A>(x, opt.coset) == fingerprint_in<A>(y, opt.coset))) return std::nullopt;
    auto h = enumerate_class(g, x, opt);
    auto j = h->index_of(y);
    if (j == kNoIndex) return std::nullopt;
    return h->conjugator(j);
}

}  // namespace cosetlab::classlab
