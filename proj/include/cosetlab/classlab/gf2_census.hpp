#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cosetlab/kernels/exec.hpp"
#include "cosetlab/mat/classical.hpp"

namespace cosetlab::classlab {

// Cosets of the index-2 subgroup of an orthogonal group over GF(2): g is inner
// iff rank(g - 1) is even.
enum class Coset { any, inner, outer };

struct JordanCensus {
    std::uint64_t scanned = 0;
    // Jordan code (largest part first, e.g. 422) -> number of 2-elements.
    std::map<std::uint32_t, std::uint64_t> counts;
    // A few members per type, chosen by a seeded hash so the choice does not
    // depend on how the scan was split.
    std::map<std::uint32_t, std::vector<mat::Matrix>> samples;
};

// Whole-group scan of the 2-elements in the coset. GF(2), n <= 8 only.
JordanCensus two_element_census(const mat::MatrixGroup& g, Coset coset, std::size_t samples_per_type,
                                std::uint64_t seed, kernels::Exec exec);
// Element-by-element version through generic matrix products.
JordanCensus two_element_census_reference(const mat::MatrixGroup& g, Coset coset, std::size_t samples_per_type,
                                          std::uint64_t seed);

struct EliminationScan {
    std::uint64_t scanned = 0;
    std::uint64_t targets = 0;     // y in the coset of the requested order
    std::uint64_t unresolved = 0;  // targets with x y a 2-element for every x
    std::optional<mat::Matrix> first_unresolved;
};

// For each y of element order `order` in the coset, looks for x in xs with
// x y not a 2-element.
EliminationScan non_two_product_scan(const mat::MatrixGroup& g, const std::vector<mat::Matrix>& xs, Coset coset,
                                     std::uint64_t order, kernels::Exec exec);

std::string jordan_code_string(std::uint32_t code);  // 422 -> "4.2^2"

}  // namespace cosetlab::classlab
