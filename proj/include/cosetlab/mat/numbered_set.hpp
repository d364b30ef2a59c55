#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cosetlab/mat/forms.hpp"
#include "cosetlab/mat/matrix.hpp"
#include "cosetlab/perm/permutation.hpp"

namespace cosetlab::mat {

enum class SetKind {
    vectors_nonzero,
    points_projective,
    points_nonsingular,       // nonsingular vectors for p = 2, nondegenerate 1-spaces for p odd
    points_singular,          // singular vectors for p = 2, singular 1-spaces for p odd
    nondegenerate_one_spaces,  // 1-spaces <v> with Q(v) != 0
    vectors_of_norm,           // vectors with Q(v) equal to a fixed nonzero value
};

std::string to_string(SetKind k);
SetKind set_kind_from_string(const std::string& s);

// An explicit numbering of vectors or 1-spaces that matrices permute. One-space
// members are stored normalized (first nonzero coordinate 1).
class NumberedSet {
public:
    // norm is only read by vectors_of_norm.
    NumberedSet(SetKind kind, const FormSpec& form, int norm = 0);

    SetKind kind() const { return kind_; }
    int p() const { return p_; }
    int n() const { return n_; }
    std::size_t size() const { return members_.size(); }
    const Vec& member(std::size_t i) const { return members_[i]; }
    const std::vector<Vec>& members() const { return members_; }
    bool projective() const { return projective_; }

    // Index of v (normalized first when projective), or -1.
    long long index_of(const Vec& v) const;
    // Image of member i under g; throws if it leaves the set.
    std::uint32_t image(std::uint32_t i, const Matrix& g) const;
    perm::Permutation permutation_of(const Matrix& g) const;

    // Value of Q on each member (0 for non-quadratic forms).
    int norm(std::size_t i) const;

private:
    SetKind kind_;
    int p_, n_;
    bool projective_;
    FormSpec form_;
    std::vector<Vec> members_;
    std::vector<std::int32_t> slot_;  // vec_index -> member or -1
};

NumberedSet nonsingular_points(const FormSpec& form);
NumberedSet nondegenerate_one_spaces(const FormSpec& form);

}  // namespace cosetlab::mat
