#pragma once

#include <cstdint>
#include <vector>

#include "cosetlab/kernels/exec.hpp"
#include "cosetlab/kernels/gf2x8.hpp"
#include "cosetlab/mat/classical.hpp"
#include "cosetlab/perm/enumerate.hpp"

namespace cosetlab::kernels {

// Transversals of a GF(2) matrix group in packed form. Level 0 also gets
// right-multiplication tables since it is the innermost loop.
struct Gf2Levels {
    int n = 0;
    std::vector<std::vector<Gf2x8>> trans;
    std::vector<Gf2RightTable> level0;
};

Gf2Levels gf2_levels(const mat::MatrixGroup& g);

// Visits every element of the group exactly once. The outermost transversal is
// split across threads, each slice folds into its own accumulator, and the
// slices are merged in index order, so the result is the same for any thread
// count. visit(acc, g); merge(into, from).
template <class Acc, class Visit, class Merge>
Acc scan_gf2(const Gf2Levels& L, Exec exec, const Acc& init, Visit&& visit, Merge&& merge) {
    const std::size_t k = L.trans.size();
    Acc out = init;
    const Gf2x8 id = gf2_identity(L.n);
    if (k == 0) {
        visit(out, id);
        return out;
    }
    if (k == 1) {
        for (Gf2x8 u : L.trans[0]) visit(out, u);
        return out;
    }
    const auto& top = L.trans[k - 1];
    std::vector<Acc> part(top.size(), init);
    auto slice = [&](std::size_t t) {
        Acc& acc = part[t];
        std::vector<Gf2x8> prefix(k + 1, id);
        prefix[k - 1] = top[t];
        auto rec = [&](auto&& self, std::size_t lvl) -> void {
            if (lvl == 0) {
                const Gf2x8 p = prefix[1];
                for (const auto& tab : L.level0) visit(acc, tab.apply(p));
                return;
            }
            for (Gf2x8 u : L.trans[lvl]) {
                prefix[lvl] = gf2_mul(prefix[lvl + 1], u);
                self(self, lvl - 1);
            }
        };
        rec(rec, k - 2);
    };
    const auto cnt = static_cast<std::int64_t>(top.size());
    if (exec == Exec::parallel) {
        ErrorSlot err;
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t t = 0; t < cnt; ++t) err.run(t, [&] { slice(static_cast<std::size_t>(t)); });
        err.rethrow();
    } else {
        for (std::int64_t t = 0; t < cnt; ++t) slice(static_cast<std::size_t>(t));
    }
    for (const auto& a : part) merge(out, a);
    return out;
}

// Reference path: generic matrix products through perm::for_each_element.
template <class Acc, class Visit>
Acc scan_gf2_reference(const mat::MatrixGroup& g, const Acc& init, Visit&& visit) {
    Acc out = init;
    perm::for_each_element(g, [&](const mat::Matrix& m) { visit(out, to_gf2(m)); });
    return out;
}

}  // namespace cosetlab::kernels
