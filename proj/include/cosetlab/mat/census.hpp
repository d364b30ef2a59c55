#pragma once

#include <cstdint>

#include "cosetlab/mat/forms.hpp"

namespace cosetlab::mat {

// Number of k-dimensional subspaces of GF(p)^n on which the form vanishes
// (Q and B for quadratic forms, B for symplectic). Brute force over reduced
// echelon bases.
std::uint64_t count_totally_singular_subspaces(const FormSpec& form, int k);

// Nondegenerate k x k forms over GF(p): alternating (zero diagonal, skew) or
// symmetric.
std::uint64_t count_nondegenerate_forms(int k, int p, bool alternating);

// Number of isometries x with (x-1)^2 = 0 and rank(x-1) = k whose induced
// form on V/ker is alternating. Such x correspond to a totally singular image
// W = [x,V] with a nondegenerate alternating form on V/W^perp.
std::uint64_t count_square_zero_isometries(const FormSpec& form, int k);

}  // namespace cosetlab::mat
