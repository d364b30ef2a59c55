#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cosetlab::perm {

using Point = std::uint32_t;

// A bijection on {0..degree-1}. Products are read left to right:
// compose(a, b) maps i to b(a(i)), so a * b means "apply a, then b".
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::size_t degree);
    explicit Permutation(std::vector<Point> images);

    static Permutation identity(std::size_t degree) { return Permutation(degree); }
    // Skips the bijection check; callers guarantee validity.
    static Permutation unchecked(std::vector<Point> images);
    // Cycles are 0-based point lists, e.g. {{0, 1, 2}} for the 3-cycle.
    static Permutation from_cycles(std::size_t degree,
                                   const std::vector<std::vector<Point>>& cycles);

    std::size_t degree() const { return images_.size(); }
    Point operator[](Point i) const { return images_[i]; }
    Point image(Point i) const { return images_[i]; }
    const std::vector<Point>& images() const { return images_; }

    Permutation inverse() const;
    bool is_identity() const;
    // Smallest moved point, or degree() for the identity.
    Point first_moved() const;
    std::vector<std::size_t> cycle_type() const;  // sorted descending, fixed points included
    std::string to_cycle_string() const;          // 1-based "(1,2,3)(4,5)"

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<Point> images_;
};

Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }
Permutation power(const Permutation& g, long long e);

}  // namespace cosetlab::perm
