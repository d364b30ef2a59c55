#include "cosetlab/mat/jordan.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "cosetlab/error.hpp"
#include "cosetlab/mat/field.hpp"

namespace cosetlab::mat {

int JordanType::dim() const {
    int s = 0;
    for (int x : parts) s += x;
    return s;
}

std::string JordanType::str() const {
    std::string s;
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (!s.empty()) s += '.';
        s += std::to_string(parts[i]);
        if (j - i > 1) s += '^' + std::to_string(j - i);
        i = j;
    }
    return s;
}

JordanType JordanType::parse(const std::string& text, int p) {
    JordanType t;
    t.p = p;
    if (text.empty()) throw ParseError("empty Jordan type", 0);
    std::size_t i = 0;
    int prev = 0;
    auto number = [&]() {
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("Jordan type '" + text + "': expected a number at offset " + std::to_string(i), 0);
        int v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > 64) throw ParseError("Jordan type '" + text + "': block too large", 0);
            ++i;
        }
        return v;
    };
    while (true) {
        int size = number();
        if (size < 1) throw ParseError("Jordan type '" + text + "': zero block size", 0);
        if (i < text.size() && text[i] == '_') {
            ++i;
            std::string sub = std::to_string(number());
            t.tag += (t.tag.empty() ? "" : ",") + std::to_string(size) + "_" + sub;
        }
        int mult = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            mult = number();
            if (mult < 2) throw ParseError("Jordan type '" + text + "': written multiplicity must be at least 2", 0);
        }
        if (prev && size >= prev)
            throw ParseError("Jordan type '" + text + "': block sizes must be strictly descending", 0);
        prev = size;
        for (int k = 0; k < mult; ++k) t.parts.push_back(size);
        if (i == text.size()) break;
        if (text[i] != '.') throw ParseError("Jordan type '" + text + "': unexpected '" + text[i] + "'", 0);
        ++i;
    }
    return t;
}

namespace {

std::uint64_t exponent_bound(int p, int n) {
    std::uint64_t e = 1;
    for (int i = 1; i <= n; ++i) e = lcm_u64(e, ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(i)) - 1);
    std::uint64_t pp = 1;
    while (pp < static_cast<std::uint64_t>(n)) pp *= static_cast<std::uint64_t>(p);
    return lcm_u64(e, pp);
}

}  // namespace

std::uint64_t element_order(const Matrix& g) {
    std::uint64_t e = exponent_bound(g.p(), g.n());
    for (std::uint64_t r : prime_factors(e)) {
        while (e % r == 0 && g.pow(static_cast<long long>(e / r)).is_identity()) e /= r;
    }
    return e;
}

bool is_unipotent(const Matrix& g) {
    // Unipotent iff (g - 1)^n = 0.
    Matrix n = g - Matrix::identity(g.p(), g.n());
    return n.pow(g.n()).is_zero();
}

JordanType jordan_type(const Matrix& g) {
    if (!is_unipotent(g)) throw Error("jordan_type: element is not unipotent");
    const int n = g.n();
    Matrix N = g - Matrix::identity(g.p(), n);
    std::vector<int> r{n};  // r[k] = rank of N^k
    Matrix pw = Matrix::identity(g.p(), n);
    while (r.back() > 0) {
        pw = pw * N;
        r.push_back(pw.rank());
    }
    // Blocks of size >= k: r[k-1] - r[k]; blocks of size exactly k: difference of that.
    JordanType t;
    t.p = g.p();
    for (std::size_t k = r.size() - 1; k >= 1; --k) {
        int ge_k = r[k - 1] - r[k];
        int ge_k1 = k + 1 < r.size() ? r[k] - r[k + 1] : 0;
        for (int c = 0; c < ge_k - ge_k1; ++c) t.parts.push_back(static_cast<int>(k));
    }
    return t;
}

std::vector<int> char_poly(const Matrix& g) {
    // Berkowitz: division free, so it works over GF(p) directly.
    const int n = g.n(), p = g.p();
    std::vector<long long> vect{1, mod(-static_cast<long long>(g(0, 0)), p)};
    for (int r = 1; r < n; ++r) {
        // C_0 = 1, C_1 = -a_rr, C_k = -R M^{k-2} S with M the leading r x r block.
        std::vector<long long> C(r + 2);
        C[0] = 1;
        C[1] = mod(-static_cast<long long>(g(r, r)), p);
        std::vector<long long> v(r);  // M^{k-2} S
        for (int i = 0; i < r; ++i) v[i] = g(i, r);
        for (int k = 2; k < r + 2; ++k) {
            long long dot = 0;
            for (int i = 0; i < r; ++i) dot += g(r, i) * v[i];
            C[k] = mod(-dot, p);
            std::vector<long long> w(r, 0);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) w[i] += g(i, j) * v[j];
            for (int i = 0; i < r; ++i) v[i] = mod(w[i], p);
        }
        std::vector<long long> next(r + 2, 0);
        for (int i = 0; i < r + 2; ++i)
            for (int j = 0; j <= std::min(i, r); ++j) next[i] += C[i - j] * vect[j];
        for (auto& x : next) x = mod(x, p);
        vect = std::move(next);
    }
    return std::vector<int>(vect.begin(), vect.end());
}

std::pair<std::uint64_t, std::uint64_t> jordan_exponents(std::uint64_t order, int p) {
    std::uint64_t pa = 1, m = order;
    while (m % static_cast<std::uint64_t>(p) == 0) {
        m /= static_cast<std::uint64_t>(p);
        pa *= static_cast<std::uint64_t>(p);
    }
    if (m == 1) return {0, 1};
    if (pa == 1) return {1, 0};
    // a = 1 mod m, a = 0 mod pa; b = 1 - a works modulo the order.
    std::uint64_t a = 0;
    for (std::uint64_t k = 0; k < m; ++k) {
        std::uint64_t cand = k * pa;
        if (cand % m == 1) {
            a = cand;
            break;
        }
    }
    std::uint64_t b = (order + 1 - a) % order;
    return {a, b};
}

std::pair<Matrix, Matrix> semisimple_unipotent_parts(const Matrix& g) {
    return split_parts(g, element_order(g), g.p(),
                       [](const Matrix& x, std::uint64_t e) { return x.pow(static_cast<long long>(e)); });
}

}  // namespace cosetlab::mat
