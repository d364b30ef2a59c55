#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace cosetlab::kernels {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0u); }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

    // Block sizes, ascending.
    std::vector<std::uint64_t> block_sizes() {
        std::vector<std::uint64_t> r;
        for (std::uint32_t i = 0; i < parent_.size(); ++i)
            if (find(i) == i) r.push_back(size_[i]);
        std::sort(r.begin(), r.end());
        return r;
    }

    // Block label per element: the smallest member index of its block.
    std::vector<std::uint32_t> labels() {
        std::vector<std::uint32_t> lab(parent_.size());
        std::vector<std::uint32_t> first(parent_.size(), 0xffffffffu);
        for (std::uint32_t i = 0; i < parent_.size(); ++i) {
            auto r = find(i);
            if (first[r] == 0xffffffffu) first[r] = i;
            lab[i] = first[r];
        }
        return lab;
    }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint64_t> size_;
};

}  // namespace cosetlab::kernels
