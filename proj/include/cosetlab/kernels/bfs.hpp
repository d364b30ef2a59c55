#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cosetlab/error.hpp"
#include "cosetlab/kernels/exec.hpp"
#include "cosetlab/kernels/key_set.hpp"
#include "cosetlab/kernels/union_find.hpp"

namespace cosetlab::kernels {

// Orbit of a key under ngens maps, with the tree that reached every member.
struct BfsTree {
    KeySet keys;
    std::vector<std::uint32_t> parent;  // parent[0] = kNoIndex
    std::vector<std::uint16_t> via;     // generator used on the parent
    std::size_t depth = 0;
};

// expand(key, out) writes the ngens neighbour keys of key into out, one block
// of width words per generator. It must be safe to call concurrently.
template <class Expand>
BfsTree bfs_orbit_serial(const KeyWord* root, std::size_t width, std::size_t ngens, Expand&& expand,
                         std::size_t cap) {
    BfsTree t{KeySet(width), {}, {}, 0};
    t.keys.insert(root);
    t.parent.push_back(kNoIndex);
    t.via.push_back(0);
    std::vector<KeyWord> buf(ngens * width);
    std::size_t lo = 0;
    while (lo < t.keys.size()) {
        std::size_t hi = t.keys.size();
        for (std::size_t m = lo; m < hi; ++m) {
            expand(t.keys.key(m), buf.data());
            for (std::size_t s = 0; s < ngens; ++s) {
                auto [idx, fresh] = t.keys.insert(buf.data() + s * width);
                if (!fresh) continue;
                t.parent.push_back(static_cast<std::uint32_t>(m));
                t.via.push_back(static_cast<std::uint16_t>(s));
                if (t.keys.size() > cap) throw CapExceeded("orbit enumeration exceeded cap " + std::to_string(cap), t.keys.size());
            }
        }
        if (hi > lo && t.keys.size() > hi) ++t.depth;
        lo = hi;
    }
    return t;
}

// Level-synchronous variant: neighbours of a frontier chunk are computed in
// parallel, then inserted serially in (member, generator) order, so the result
// equals bfs_orbit_serial exactly.
template <class Expand>
BfsTree bfs_orbit(const KeyWord* root, std::size_t width, std::size_t ngens, Expand&& expand, std::size_t cap,
                  Exec exec = Exec::parallel) {
    if (exec == Exec::serial) return bfs_orbit_serial(root, width, ngens, expand, cap);
    BfsTree t{KeySet(width), {}, {}, 0};
    t.keys.insert(root);
    t.parent.push_back(kNoIndex);
    t.via.push_back(0);
    constexpr std::size_t kChunk = 8192;
    const std::size_t stride = ngens * width;
    std::vector<KeyWord> buf(kChunk * stride);
    std::size_t lo = 0;
    while (lo < t.keys.size()) {
        std::size_t hi = t.keys.size();
        for (std::size_t c0 = lo; c0 < hi; c0 += kChunk) {
            const auto c1 = std::min(hi, c0 + kChunk);
            const auto cnt = static_cast<std::int64_t>(c1 - c0);
            ErrorSlot err;
#pragma omp parallel for schedule(dynamic, 64)
            for (std::int64_t i = 0; i < cnt; ++i)
                err.run(i, [&] {
                    expand(t.keys.key(c0 + static_cast<std::size_t>(i)), buf.data() + static_cast<std::size_t>(i) * stride);
                });
            err.rethrow();
            for (std::size_t m = c0; m < c1; ++m) {
                const KeyWord* nb = buf.data() + (m - c0) * stride;
                for (std::size_t s = 0; s < ngens; ++s) {
                    auto [idx, fresh] = t.keys.insert(nb + s * width);
                    if (!fresh) continue;
                    t.parent.push_back(static_cast<std::uint32_t>(m));
                    t.via.push_back(static_cast<std::uint16_t>(s));
                    if (t.keys.size() > cap)
                        throw CapExceeded("orbit enumeration exceeded cap " + std::to_string(cap), t.keys.size());
                }
            }
        }
        if (t.keys.size() > hi) ++t.depth;
        lo = hi;
    }
    return t;
}

struct OrbitPartition {
    std::vector<std::uint64_t> sizes;  // ascending
    std::vector<std::uint32_t> label;  // smallest member of each element's orbit
    std::size_t count() const { return sizes.size(); }
};

// Orbits of maps on {0..n-1}; image(i, s) gives the image of i under map s.
template <class Image>
OrbitPartition orbit_partition(std::size_t n, std::size_t nmaps, Image&& image, Exec exec = Exec::parallel) {
    DisjointSets ds(n);
    std::vector<std::uint32_t> img(n);
    const auto cnt = static_cast<std::int64_t>(n);
    for (std::size_t s = 0; s < nmaps; ++s) {
        if (exec == Exec::parallel) {
            ErrorSlot err;
#pragma omp parallel for schedule(static)
            for (std::int64_t i = 0; i < cnt; ++i) err.run(i, [&] { img[i] = image(static_cast<std::uint32_t>(i), s); });
            err.rethrow();
        } else {
            for (std::int64_t i = 0; i < cnt; ++i) img[i] = image(static_cast<std::uint32_t>(i), s);
        }
        for (std::uint32_t i = 0; i < n; ++i) ds.unite(i, img[i]);
    }
    return {ds.block_sizes(), ds.labels()};
}

}  // namespace cosetlab::kernels
