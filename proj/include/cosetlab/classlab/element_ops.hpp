#pragma once

#include <cstdint>
#include <numeric>

#include "cosetlab/mat/jordan.hpp"
#include "cosetlab/mat/matrix.hpp"
#include "cosetlab/perm/permutation.hpp"

namespace cosetlab::classlab {

inline std::uint64_t element_order(const perm::Permutation& g) {
    std::uint64_t o = 1;
    for (auto c : g.cycle_type()) o = std::lcm(o, static_cast<std::uint64_t>(c));
    return o;
}
using mat::element_order;

inline perm::Permutation pow_elt(const perm::Permutation& g, std::uint64_t e) {
    return perm::power(g, static_cast<long long>(e));
}
inline mat::Matrix pow_elt(const mat::Matrix& g, std::uint64_t e) { return g.pow(static_cast<long long>(e)); }

inline bool is_prime_power_of(std::uint64_t o, int p) {
    while (o % static_cast<std::uint64_t>(p) == 0) o /= static_cast<std::uint64_t>(p);
    return o == 1;
}

// The identity counts as a p-element for every p.
template <class E>
bool is_p_element(const E& g, int p) {
    return is_prime_power_of(element_order(g), p);
}

// [a, b] = a^-1 b^-1 a b
template <class A>
typename A::Element commutator(const A& act, const typename A::Element& a, const typename A::Element& b) {
    return act.multiply(act.multiply(act.inverse(a), act.inverse(b)), act.multiply(a, b));
}

// b^-1 a b
template <class A>
typename A::Element conjugate(const A& act, const typename A::Element& a, const typename A::Element& b,
                              const typename A::Element& binv) {
    return act.multiply(act.multiply(binv, a), b);
}

}  // namespace cosetlab::classlab
