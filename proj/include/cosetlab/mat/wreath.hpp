#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cosetlab/mat/classical.hpp"
#include "cosetlab/params.hpp"

namespace cosetlab::mat {

// SL_2(q) wr 2 as block-diagonal pairs and the block swap, in 4 dimensions.
struct WreathSL2 {
    int q = 3;
    Matrix swap;
    std::vector<Matrix> generators;
    std::shared_ptr<const MatrixGroup> group;

    Matrix embed(const Matrix& a, const Matrix& b) const { return direct_sum(a, b); }
    // Block diagonal elements form the base group.
    bool inner(const Matrix& g) const;
};

WreathSL2 wreath_sl2(int q, std::uint64_t seed = 0);

// Kinds: swap; pair(a, b, outer) where a and b name 2x2 kinds (identity,
// minus_identity, transvection, transvection_inverse, or any SL kind with
// params prefixed "a_"/"b_"), optionally followed by the swap when outer = 1.
Matrix wreath_element(const std::string& kind, const Params& params, const WreathSL2& w);

}  // namespace cosetlab::mat
