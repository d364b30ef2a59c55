#include "cosetlab/mat/dual.hpp"

#include "cosetlab/error.hpp"
#include "cosetlab/mat/classical.hpp"
#include "cosetlab/mat/elements.hpp"
#include "cosetlab/mat/field.hpp"

namespace cosetlab::mat {

perm::Permutation DualExtension::perm_of(const Matrix& m) const {
    const std::size_t N = num_points();
    Matrix inv_t = m.inverse().transpose();
    std::vector<perm::Point> img(2 * N);
    for (std::size_t i = 0; i < N; ++i) {
        img[i] = static_cast<perm::Point>(slot[vec_index(normalize(m.apply(points[i]), q), q)]);
        // c -> M^{-1} c as a column, i.e. c^T M^{-T} as a row.
        img[N + i] = static_cast<perm::Point>(N + slot[vec_index(normalize(inv_t.apply(points[i]), q), q)]);
    }
    return perm::Permutation(std::move(img));
}

perm::Permutation DualExtension::polarity(const Matrix& gram) const { return perm_of(gram) * graph; }

DualExtension dual_extension(int n, int q, std::uint64_t seed) {
    require_prime(q);
    if (n < 3) throw Unsupported("dual extension needs n >= 3");
    DualExtension d;
    d.n = n;
    d.q = q;
    std::uint32_t total = static_cast<std::uint32_t>(ipow(static_cast<std::uint64_t>(q), static_cast<unsigned>(n)));
    d.slot.assign(total, -1);
    for (std::uint32_t idx = 1; idx < total; ++idx) {
        Vec v = vec_from_index(idx, n, q);
        if (!(normalize(v, q) == v)) continue;
        d.slot[idx] = static_cast<std::int32_t>(d.points.size());
        d.points.push_back(v);
    }
    const std::size_t N = d.points.size();
    std::vector<perm::Point> t(2 * N);
    for (std::size_t i = 0; i < N; ++i) {
        t[i] = static_cast<perm::Point>(N + i);
        t[N + i] = static_cast<perm::Point>(i);
    }
    d.graph = perm::Permutation(std::move(t));

    FormSpec none{FormKind::none, q, n, Matrix(q, n), Matrix(q, n)};
    d.matrix_generators = generator_pool(Family::GL, none);
    std::vector<perm::Permutation> gens;
    for (const auto& m : d.matrix_generators) gens.push_back(d.perm_of(m));
    gens.push_back(d.graph);
    perm::BuildOptions o;
    o.known_order = group_order_formula(GroupSpec{Family::SL_dual_ext, n, q, ActionKind::vectors_plus_covectors});
    o.seed = seed;
    o.provenance = "PGL(" + std::to_string(n) + "," + std::to_string(q) + ").2 on points and hyperplanes";
    d.group = std::make_shared<const perm::PermGroup>(perm::PermGroup::build(perm::PermAction(2 * N), gens, o));
    return d;
}

perm::Permutation dual_element(const std::string& kind, const Params& params, const DualExtension& d) {
    perm::Permutation g;
    if (kind == "graph") {
        g = d.graph;
    } else if (kind == "polarity") {
        std::string form = params.get_string("form", "symplectic");
        if (form == "symmetric") {
            g = d.graph;
        } else if (form == "symplectic") {
            if (d.n % 2) throw Unsupported("symplectic polarity needs even n");
            g = d.polarity(standard_form(FormKind::symplectic, d.q, d.n).gram);
        } else {
            throw Unsupported("polarity: form must be symplectic or symmetric");
        }
    } else {
        FormSpec none{FormKind::none, d.q, d.n, Matrix(d.q, d.n), Matrix(d.q, d.n)};
        g = d.perm_of(construct_matrix(kind, params, Family::SL_dual_ext, none));
    }
    if (!d.group->contains(g)) throw NotInGroup(kind + " is not in the dual extension");
    return g;
}

}  // namespace cosetlab::mat
