#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cosetlab/perm/action.hpp"

namespace cosetlab::perm {

// Product replacement random element generator with an accumulator
// ("rattle" variant). Deterministic for a fixed seed.
template <GroupAction A>
class ProductReplacement {
public:
    using Element = typename A::Element;

    ProductReplacement(const A& action, const std::vector<Element>& gens, std::uint64_t seed)
        : action_(action), rng_(seed ^ 0x9e3779b97f4a7c15ULL), acc_(action.identity()) {
        if (gens.empty()) {
            state_.push_back(action.identity());
        } else {
            std::size_t r = std::max<std::size_t>(10, 2 * gens.size());
            for (std::size_t i = 0; i < r; ++i) state_.push_back(gens[i % gens.size()]);
        }
        for (int i = 0; i < 60; ++i) next();
    }

    Element next() {
        std::size_t r = state_.size();
        if (r == 1) {
            acc_ = action_.multiply(acc_, state_[0]);
            return acc_;
        }
        std::uniform_int_distribution<std::size_t> pick(0, r - 1);
        std::size_t i = pick(rng_), j = pick(rng_);
        while (j == i) j = pick(rng_);
        bool inv = rng_() & 1;
        bool left = rng_() & 1;
        const Element& sj = inv ? action_.inverse(state_[j]) : state_[j];
        state_[i] = left ? action_.multiply(sj, state_[i]) : action_.multiply(state_[i], sj);
        acc_ = action_.multiply(acc_, state_[i]);
        return acc_;
    }

private:
    A action_;
    std::mt19937_64 rng_;
    std::vector<Element> state_;
    Element acc_;
};

}  // namespace cosetlab::perm
