#pragma once

#include <string>
#include <vector>

#include "cosetlab/mat/classical.hpp"
#include "cosetlab/params.hpp"

namespace cosetlab::mat {

// Element kinds understood by construct_matrix:
//   identity, transvection, reflection(norm), long_root_element,
//   pseudoreflection(eigenvalue), unipotent(jordan), semisimple(eigenvalues,
//   rotation_order), alt_involution(rank), siegel(rank), gl_centralizer,
//   literal(matrix = "rows/separated/by/slashes").
std::vector<std::string> matrix_element_kinds();

// Builds the element in the standard coordinates of the family without a
// membership test. Throws Unsupported for kind/characteristic mismatches.
Matrix construct_matrix(const std::string& kind, const Params& params, Family family, const FormSpec& form);

// construct_matrix, then checks membership and the advertised property.
Matrix element_constructor(const std::string& kind, const Params& params, const ClassicalGroup& g);

Matrix jordan_block(int p, int size);

}  // namespace cosetlab::mat
