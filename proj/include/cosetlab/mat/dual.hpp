#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cosetlab/mat/matrix.hpp"
#include "cosetlab/params.hpp"
#include "cosetlab/perm/group.hpp"

namespace cosetlab::mat {

// PGL_n(q) extended by the inverse-transpose automorphism, acting faithfully
// on projective points (0..N-1) and hyperplanes (N..2N-1). A hyperplane is
// stored by its normalized functional c, so H_c = {v : v.c = 0}.
struct DualExtension {
    int n = 0;
    int q = 2;
    std::vector<Vec> points;
    std::vector<std::int32_t> slot;  // vec_index -> point number or -1
    std::vector<Matrix> matrix_generators;
    std::shared_ptr<const perm::PermGroup> group;
    perm::Permutation graph;  // swaps v and the hyperplane with functional v

    std::size_t num_points() const { return points.size(); }
    perm::Permutation perm_of(const Matrix& m) const;
    // Polarity v -> v^perp for the bilinear form with this Gram matrix.
    perm::Permutation polarity(const Matrix& gram) const;
    // True iff g preserves the two families (lies in PGL_n(q)).
    bool inner(const perm::Permutation& g) const { return g[0] < num_points(); }
};

DualExtension dual_extension(int n, int q, std::uint64_t seed = 0);

// Kinds: graph, polarity(form = symplectic | symmetric), plus every matrix
// kind of construct_matrix for the linear family.
perm::Permutation dual_element(const std::string& kind, const Params& params, const DualExtension& d);

}  // namespace cosetlab::mat
