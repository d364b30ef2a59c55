#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cosetlab/perm/permutation.hpp"

namespace cosetlab::perm {

// Element keys are fixed-width runs of 32-bit words. For permutation groups the
// words are the base images; matrix actions pack the entries instead.
using KeyWord = std::uint32_t;
using ElementKey = std::vector<KeyWord>;

template <class A>
concept GroupAction = requires(const A& a, const typename A::Element& g, Point x,
                               std::span<const Point> base, KeyWord* out, const KeyWord* in) {
    typename A::Element;
    { A::key_is_base_image } -> std::convertible_to<bool>;
    { a.degree() } -> std::convertible_to<std::size_t>;
    { a.image(g, x) } -> std::same_as<Point>;
    { a.multiply(g, g) } -> std::same_as<typename A::Element>;
    { a.inverse(g) } -> std::same_as<typename A::Element>;
    { a.identity() } -> std::same_as<typename A::Element>;
    { a.is_identity(g) } -> std::same_as<bool>;
    { a.equal(g, g) } -> std::same_as<bool>;
    { a.element_bytes() } -> std::convertible_to<std::size_t>;
    { a.key_width(base.size()) } -> std::convertible_to<std::size_t>;
    a.encode_key(g, base, out);
};

// Matrix-style actions can rebuild an element straight from its key.
template <class A>
concept DecodableAction = GroupAction<A> && requires(const A& a, const KeyWord* in) {
    { a.decode_key(in) } -> std::same_as<typename A::Element>;
};

struct PermAction {
    using Element = Permutation;
    static constexpr bool key_is_base_image = true;

    std::size_t n = 0;

    PermAction() = default;
    explicit PermAction(std::size_t degree) : n(degree) {}

    std::size_t degree() const { return n; }
    Point image(const Permutation& g, Point x) const { return g[x]; }
    Permutation multiply(const Permutation& a, const Permutation& b) const { return compose(a, b); }
    Permutation inverse(const Permutation& g) const { return g.inverse(); }
    Permutation identity() const { return Permutation::identity(n); }
    bool is_identity(const Permutation& g) const { return g.is_identity(); }
    bool equal(const Permutation& a, const Permutation& b) const { return a == b; }
    std::size_t element_bytes() const { return n * sizeof(Point) + sizeof(Permutation); }
    std::size_t key_width(std::size_t base_len) const { return base_len; }
    void encode_key(const Permutation& g, std::span<const Point> base, KeyWord* out) const {
        for (std::size_t i = 0; i < base.size(); ++i) out[i] = g[base[i]];
    }
};

}  // namespace cosetlab::perm
