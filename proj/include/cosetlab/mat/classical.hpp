#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cosetlab/mat/forms.hpp"
#include "cosetlab/mat/matrix.hpp"
#include "cosetlab/mat/numbered_set.hpp"
#include "cosetlab/perm/group.hpp"

namespace cosetlab::mat {

enum class Family { SL, GL, Sp, GO_plus, GO_minus, SO_odd, SL_dual_ext, wreath_SL2 };

enum class ActionKind { vectors_nonzero, points_projective, points_nonsingular, points_singular, vectors_plus_covectors };

std::string to_string(Family f);
Family family_from_string(const std::string& s);
std::string to_string(ActionKind a);
ActionKind action_from_string(const std::string& s);
SetKind set_kind(ActionKind a);

struct GroupSpec {
    Family family = Family::SL;
    int n = 2;
    int q = 2;
    ActionKind action = ActionKind::vectors_nonzero;

    std::string str() const;  // "GO_plus(8,2)"
    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

FormKind form_kind(Family f);
// Exact order of the group the constructors build (not a simple quotient).
std::uint64_t group_order_formula(const GroupSpec& spec);

using MatrixGroup = perm::Group<MatrixAction>;

struct ClassicalGroup {
    GroupSpec spec;
    FormSpec form;
    std::vector<Matrix> generators;
    std::shared_ptr<const MatrixGroup> group;
    std::shared_ptr<const NumberedSet> points;  // numbering table for spec.action

    int p() const { return spec.q; }
    int n() const { return spec.n; }
    bool contains(const Matrix& g) const { return group->contains(g); }
    // False only for the non-identity coset of an orthogonal group's index-2
    // subgroup (Dickson invariant or determinant).
    bool inner(const Matrix& g) const;
    perm::Permutation permutation_of(const Matrix& g) const { return points->permutation_of(g); }
};

// Seeded selection from a pool of form-preserving elements; generators are
// added until the order formula is met.
ClassicalGroup classical_group(const GroupSpec& spec, std::uint64_t seed = 0);

// Pool of candidate generators for the family (all preserve the standard form).
std::vector<Matrix> generator_pool(Family family, const FormSpec& form);

// Builds a matrix group from explicit generators, adding pool elements is not
// attempted. known_order is optional.
MatrixGroup build_matrix_group(int p, int n, const std::vector<Matrix>& gens, std::optional<std::uint64_t> known_order,
                               std::uint64_t seed, const std::string& provenance);

// Number of hyperbolic pairs (e_i, f_i) = coordinates (2i, 2i+1) in the
// standard form of the family.
int hyperbolic_pair_count(Family f, int n);

// Levi element A + A^{-T} on the first m hyperbolic pairs; identity elsewhere.
Matrix levi_element(const Matrix& a, int n);
// Unipotent radical element: f_i -> f_i + sum_j S_ij e_j.
Matrix siegel_element(const Matrix& s, int n);

}  // namespace cosetlab::mat
