#include "cosetlab/kernels/gf2x8.hpp"

#include "cosetlab/error.hpp"

namespace cosetlab::kernels {

Gf2x8 to_gf2(const mat::Matrix& m) {
    if (m.p() != 2 || m.n() > 8) throw Unsupported("GF(2) kernel needs p = 2 and n <= 8");
    Gf2x8 g = 0;
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j)
            if (m(i, j)) g |= Gf2x8{1} << (8 * i + j);
    return g;
}

mat::Matrix from_gf2(Gf2x8 g, int n) {
    mat::Matrix m(2, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.set(i, j, (g >> (8 * i + j)) & 1);
    return m;
}

Gf2RightTable::Gf2RightTable(Gf2x8 b) {
    for (int x = 1; x < 256; ++x) {
        int low = __builtin_ctz(static_cast<unsigned>(x));
        t[x] = static_cast<std::uint8_t>(t[x & (x - 1)] ^ ((b >> (8 * low)) & 0xffu));
    }
}

std::uint64_t gf2_two_power_order(Gf2x8 g, int n) {
    const Gf2x8 id = gf2_identity(n);
    std::uint64_t ord = 1;
    for (int i = 0; i <= 3; ++i) {
        if (g == id) return ord;
        g = gf2_mul(g, g);
        ord *= 2;
    }
    return g == id ? ord : 0;
}

std::uint32_t gf2_jordan_code(Gf2x8 g, int n) {
    const Gf2x8 N = g ^ gf2_identity(n);
    int r[10] = {n};
    int len = 1;
    Gf2x8 pw = N;
    while (len <= n && r[len - 1] > 0) {
        r[len] = gf2_rank(pw);
        pw = gf2_mul(pw, N);
        ++len;
    }
    if (r[len - 1] != 0) return 0;
    std::uint32_t code = 0;
    for (int k = len - 1; k >= 1; --k) {
        int ge_k = r[k - 1] - r[k];
        int ge_k1 = k + 1 < len ? r[k] - r[k + 1] : 0;
        for (int c = 0; c < ge_k - ge_k1; ++c) code = code * 10 + static_cast<std::uint32_t>(k);
    }
    return code;
}

std::vector<int> gf2_jordan(Gf2x8 g, int n) {
    const Gf2x8 N = g ^ gf2_identity(n);
    std::vector<int> r{n};
    Gf2x8 pw = gf2_identity(n);
    for (int k = 1; k <= n && r.back() > 0; ++k) {
        pw = gf2_mul(pw, N);
        r.push_back(gf2_rank(pw));
    }
    if (r.back() != 0) return {};
    std::vector<int> parts;
    for (std::size_t k = r.size() - 1; k >= 1; --k) {
        int ge_k = r[k - 1] - r[k];
        int ge_k1 = k + 1 < r.size() ? r[k] - r[k + 1] : 0;
        for (int c = 0; c < ge_k - ge_k1; ++c) parts.push_back(static_cast<int>(k));
    }
    return parts;
}

}  // namespace cosetlab::kernels
