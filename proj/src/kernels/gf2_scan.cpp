#include "cosetlab/kernels/gf2_scan.hpp"

#include "cosetlab/error.hpp"

namespace cosetlab::kernels {

Gf2Levels gf2_levels(const mat::MatrixGroup& g) {
    if (g.action().p != 2 || g.action().n > 8) throw Unsupported("GF(2) scan needs p = 2 and n <= 8");
    Gf2Levels L;
    L.n = g.action().n;
    for (std::size_t i = 0; i < g.num_levels(); ++i) {
        std::vector<Gf2x8> t;
        t.reserve(g.level(i).transversal.size());
        for (const auto& m : g.level(i).transversal) t.push_back(to_gf2(m));
        L.trans.push_back(std::move(t));
    }
    if (!L.trans.empty())
        for (Gf2x8 u : L.trans[0]) L.level0.emplace_back(u);
    return L;
}

}  // namespace cosetlab::kernels
