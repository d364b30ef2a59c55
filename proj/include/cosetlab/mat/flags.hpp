#pragma once

#include <optional>
#include <vector>

#include "cosetlab/mat/matrix.hpp"

namespace cosetlab::mat {

// Row-reduced basis of a subspace of GF(p)^n.
class Subspace {
public:
    Subspace(int p, int n) : p_(p), n_(n) {}

    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<Vec>& basis() const { return rows_; }
    bool contains(const Vec& v) const;
    // Adds v; returns false if it was already inside.
    bool add(const Vec& v);
    bool stable_under(const Matrix& g) const;
    friend bool operator==(const Subspace& a, const Subspace& b) { return a.rows_ == b.rows_; }

private:
    Vec reduce(const Vec& v) const;
    void canonicalize();

    int p_, n_;
    std::vector<Vec> rows_;
    std::vector<int> pivots_;
};

// V_1 < V_2 < ... < V_{n-1}.
struct Flag {
    std::vector<Subspace> chain;
};

// A complete flag stabilized by every element, if one exists. Exhaustive
// depth-first search; limited to n <= 4 and p <= 3.
std::optional<Flag> common_flag(const std::vector<Matrix>& elements);
inline bool common_flag_exists(const std::vector<Matrix>& elements) { return common_flag(elements).has_value(); }

// Whether the elements stabilize a common complete flag over the algebraic
// closure of GF(p), i.e. lie in a common Borel subgroup of GL_n. Equivalent to
// the two-sided ideal generated by their commutators in the algebra they span
// being nilpotent. Any n, any p.
bool common_flag_over_closure(const std::vector<Matrix>& elements);

}  // namespace cosetlab::mat
