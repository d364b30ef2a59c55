#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cosetlab/mat/matrix.hpp"

namespace cosetlab::kernels {

// 8x8 matrix over GF(2) in one word: byte i is row i, bit j is entry (i, j).
// Smaller dimensions sit in the top-left corner with zero padding.
using Gf2x8 = std::uint64_t;

inline constexpr std::uint64_t kLowBits = 0x0101010101010101ULL;

constexpr Gf2x8 gf2_identity(int n) {
    Gf2x8 g = 0;
    for (int i = 0; i < n; ++i) g |= Gf2x8{1} << (9 * i);
    return g;
}
Gf2x8 to_gf2(const mat::Matrix& m);
mat::Matrix from_gf2(Gf2x8 g, int n);

// Row-vector product A*B ("A then B").
inline Gf2x8 gf2_mul(Gf2x8 a, Gf2x8 b) {
    Gf2x8 r = 0;
    for (int j = 0; j < 8; ++j) {
        Gf2x8 mask = ((a >> j) & kLowBits) * 0xffu;
        Gf2x8 row = ((b >> (8 * j)) & 0xffu) * kLowBits;
        r ^= mask & row;
    }
    return r;
}

// Right multiplication by a fixed matrix through a byte table.
struct Gf2RightTable {
    std::array<std::uint8_t, 256> t{};
    explicit Gf2RightTable(Gf2x8 b = 0);
    Gf2x8 apply(Gf2x8 a) const {
        Gf2x8 r = 0;
        for (int i = 0; i < 8; ++i) r |= static_cast<Gf2x8>(t[(a >> (8 * i)) & 0xffu]) << (8 * i);
        return r;
    }
};

inline int gf2_rank(Gf2x8 m) {
    std::uint8_t rows[8];
    for (int i = 0; i < 8; ++i) rows[i] = static_cast<std::uint8_t>(m >> (8 * i));
    int rank = 0;
    for (int i = 0; i < 8; ++i) {
        const std::uint8_t r = rows[i];
        if (!r) continue;
        ++rank;
        const std::uint8_t low = r & static_cast<std::uint8_t>(-r);
        for (int j = i + 1; j < 8; ++j) rows[j] ^= (rows[j] & low) ? r : 0;
    }
    return rank;
}

// True iff g^(2^k) = 1 for 2^k >= n, i.e. g is a 2-element.
inline bool gf2_is_two_element(Gf2x8 g, int n) {
    const Gf2x8 id = gf2_identity(n);
    for (int k = 1; k < n; k *= 2) g = gf2_mul(g, g);
    return g == id;
}

// Jordan partition of a unipotent element (descending); empty if g is not unipotent.
std::vector<int> gf2_jordan(Gf2x8 g, int n);
// Same partition as decimal digits, largest part first ("4.2^2" -> 422); 0 if
// g is not unipotent.
std::uint32_t gf2_jordan_code(Gf2x8 g, int n);
std::uint64_t gf2_two_power_order(Gf2x8 g, int n);  // 0 if not a 2-element

}  // namespace cosetlab::kernels
