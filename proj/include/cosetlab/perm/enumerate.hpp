#pragma once

#include <vector>

#include "cosetlab/perm/group.hpp"

namespace cosetlab::perm {

// Serial walk over every element of G as a product of transversal elements,
// deepest level first. fn receives each element once.
template <GroupAction A, class Fn>
void for_each_element(const Group<A>& g, Fn&& fn) {
    const auto& a = g.action();
    const std::size_t k = g.num_levels();
    if (k == 0) {
        fn(a.identity());
        return;
    }
    std::vector<typename A::Element> prefix(k + 1, a.identity());
    auto rec = [&](auto&& self, std::size_t lvl) -> void {
        const auto& l = g.level(lvl);
        for (const auto& u : l.transversal) {
            prefix[lvl] = a.multiply(prefix[lvl + 1], u);
            if (lvl == 0)
                fn(prefix[0]);
            else
                self(self, lvl - 1);
        }
    };
    rec(rec, k - 1);
}

}  // namespace cosetlab::perm
