#include "cosetlab/mat/matrix.hpp"

#include <utility>

#include "cosetlab/error.hpp"
#include "cosetlab/mat/field.hpp"

namespace cosetlab::mat {

bool Vec::is_zero() const {
    for (int i = 0; i < n; ++i)
        if (c[i]) return false;
    return true;
}

Vec add(const Vec& a, const Vec& b, int p) {
    Vec r(a.n);
    for (int i = 0; i < a.n; ++i) r.c[i] = static_cast<std::uint8_t>((a.c[i] + b.c[i]) % p);
    return r;
}

Vec scale(const Vec& a, int s, int p) {
    Vec r(a.n);
    s = mod(s, p);
    for (int i = 0; i < a.n; ++i) r.c[i] = static_cast<std::uint8_t>(a.c[i] * s % p);
    return r;
}

std::uint32_t vec_index(const Vec& v, int p) {
    std::uint32_t idx = 0;
    for (int i = v.n; i-- > 0;) idx = idx * static_cast<std::uint32_t>(p) + v.c[i];
    return idx;
}

Vec vec_from_index(std::uint32_t idx, int n, int p) {
    Vec v(n);
    for (int i = 0; i < n; ++i) {
        v.c[i] = static_cast<std::uint8_t>(idx % static_cast<std::uint32_t>(p));
        idx /= static_cast<std::uint32_t>(p);
    }
    return v;
}

Vec normalize(const Vec& v, int p) {
    for (int i = 0; i < v.n; ++i)
        if (v.c[i]) return scale(v, inv_mod(v.c[i], p), p);
    return v;
}

std::string to_string(const Vec& v) {
    std::string s;
    for (int i = 0; i < v.n; ++i) s += static_cast<char>('0' + v.c[i]);
    return s;
}

Matrix::Matrix(int p, int n) : p_(static_cast<std::uint8_t>(p)), n_(static_cast<std::uint8_t>(n)) {
    if (n < 1 || n > kMaxDim) throw Unsupported("matrix dimension " + std::to_string(n) + " outside 1..8");
    require_prime(p);
}

Matrix Matrix::identity(int p, int n) {
    Matrix m(p, n);
    for (int i = 0; i < n; ++i) m.a_[i * kMaxDim + i] = 1;
    return m;
}

Matrix Matrix::from_rows(int p, const std::vector<std::vector<int>>& rows) {
    int n = static_cast<int>(rows.size());
    Matrix m(p, n);
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(rows[r].size()) != n) throw Error("matrix rows must form a square");
        for (int c = 0; c < n; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

Matrix Matrix::diagonal(int p, const std::vector<int>& d) {
    Matrix m(p, static_cast<int>(d.size()));
    for (int i = 0; i < m.n(); ++i) m.set(i, i, d[i]);
    return m;
}

void Matrix::set(int r, int c, long long v) { a_[r * kMaxDim + c] = static_cast<std::uint8_t>(mod(v, p_)); }

Vec Matrix::row(int r) const {
    Vec v(n_);
    for (int c = 0; c < n_; ++c) v.c[c] = a_[r * kMaxDim + c];
    return v;
}

void Matrix::set_row(int r, const Vec& v) {
    for (int c = 0; c < n_; ++c) a_[r * kMaxDim + c] = v.c[c];
}

Matrix Matrix::operator*(const Matrix& b) const {
    Matrix r;
    r.p_ = p_;
    r.n_ = n_;
    const int n = n_;
    if (p_ == 2) {
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (!a_[i * kMaxDim + k]) continue;
                for (int j = 0; j < n; ++j) r.a_[i * kMaxDim + j] ^= b.a_[k * kMaxDim + j];
            }
        return r;
    }
    for (int i = 0; i < n; ++i) {
        unsigned acc[kMaxDim] = {};
        for (int k = 0; k < n; ++k) {
            unsigned x = a_[i * kMaxDim + k];
            if (!x) continue;
            for (int j = 0; j < n; ++j) acc[j] += x * b.a_[k * kMaxDim + j];
        }
        for (int j = 0; j < n; ++j) r.a_[i * kMaxDim + j] = static_cast<std::uint8_t>(acc[j] % p_);
    }
    return r;
}

Matrix Matrix::operator+(const Matrix& b) const {
    Matrix r = *this;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.a_[i * kMaxDim + j] = static_cast<std::uint8_t>((a_[i * kMaxDim + j] + b.a_[i * kMaxDim + j]) % p_);
    return r;
}

Matrix Matrix::operator-(const Matrix& b) const {
    Matrix r = *this;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            r.a_[i * kMaxDim + j] = static_cast<std::uint8_t>((a_[i * kMaxDim + j] + p_ - b.a_[i * kMaxDim + j]) % p_);
    return r;
}

Matrix Matrix::scaled(int s) const {
    Matrix r = *this;
    s = mod(s, p_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.a_[i * kMaxDim + j] = static_cast<std::uint8_t>(a_[i * kMaxDim + j] * s % p_);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r = *this;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.a_[i * kMaxDim + j] = a_[j * kMaxDim + i];
    return r;
}

Matrix Matrix::inverse() const {
    const int n = n_, p = p_;
    Matrix a = *this, inv = identity(p, n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a(r, col)) {
                piv = r;
                break;
            }
        if (piv < 0) throw Error("matrix is singular");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.a_[piv * kMaxDim + j], a.a_[col * kMaxDim + j]);
                std::swap(inv.a_[piv * kMaxDim + j], inv.a_[col * kMaxDim + j]);
            }
        int s = inv_mod(a(col, col), p);
        for (int j = 0; j < n; ++j) {
            a.a_[col * kMaxDim + j] = static_cast<std::uint8_t>(a(col, j) * s % p);
            inv.a_[col * kMaxDim + j] = static_cast<std::uint8_t>(inv(col, j) * s % p);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || !a(r, col)) continue;
            int f = p - a(r, col);
            for (int j = 0; j < n; ++j) {
                a.a_[r * kMaxDim + j] = static_cast<std::uint8_t>((a(r, j) + f * a(col, j)) % p);
                inv.a_[r * kMaxDim + j] = static_cast<std::uint8_t>((inv(r, j) + f * inv(col, j)) % p);
            }
        }
    }
    return inv;
}

Matrix Matrix::pow(long long e) const {
    Matrix base = e < 0 ? inverse() : *this;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    Matrix acc = identity(p_, n_);
    while (k) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

int Matrix::determinant() const {
    const int n = n_, p = p_;
    Matrix a = *this;
    long long det = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a(r, col)) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(a.a_[piv * kMaxDim + j], a.a_[col * kMaxDim + j]);
            det = -det;
        }
        det = mod(det * a(col, col), p);
        int s = inv_mod(a(col, col), p);
        for (int r = col + 1; r < n; ++r) {
            if (!a(r, col)) continue;
            int f = mod(-static_cast<long long>(a(r, col)) * s, p);
            for (int j = col; j < n; ++j) a.a_[r * kMaxDim + j] = static_cast<std::uint8_t>((a(r, j) + f * a(col, j)) % p);
        }
    }
    return mod(det, p);
}

int Matrix::rank() const {
    const int n = n_, p = p_;
    Matrix a = *this;
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (a(r, col)) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < n; ++j) std::swap(a.a_[piv * kMaxDim + j], a.a_[rank * kMaxDim + j]);
        int s = inv_mod(a(rank, col), p);
        for (int r = rank + 1; r < n; ++r) {
            if (!a(r, col)) continue;
            int f = mod(-static_cast<long long>(a(r, col)) * s, p);
            for (int j = col; j < n; ++j) a.a_[r * kMaxDim + j] = static_cast<std::uint8_t>((a(r, j) + f * a(rank, j)) % p);
        }
        ++rank;
    }
    return rank;
}

bool Matrix::is_identity() const { return *this == identity(p_, n_); }

bool Matrix::is_zero() const {
    for (auto x : a_)
        if (x) return false;
    return true;
}

bool Matrix::is_scalar() const { return *this == identity(p_, n_).scaled(a_[0]) && a_[0] != 0; }

Vec Matrix::apply(const Vec& v) const {
    Vec r(n_);
    unsigned acc[kMaxDim] = {};
    for (int i = 0; i < n_; ++i) {
        if (!v.c[i]) continue;
        for (int j = 0; j < n_; ++j) acc[j] += static_cast<unsigned>(v.c[i]) * a_[i * kMaxDim + j];
    }
    for (int j = 0; j < n_; ++j) r.c[j] = static_cast<std::uint8_t>(acc[j] % p_);
    return r;
}

std::string Matrix::to_string() const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
        if (i) s += '/';
        for (int j = 0; j < n_; ++j) s += static_cast<char>('0' + (*this)(i, j));
    }
    return s;
}

std::vector<std::vector<int>> Matrix::rows() const {
    std::vector<std::vector<int>> r(n_, std::vector<int>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r[i][j] = (*this)(i, j);
    return r;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix m(a.p(), a.n() + b.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) m.set(i, j, a(i, j));
    for (int i = 0; i < b.n(); ++i)
        for (int j = 0; j < b.n(); ++j) m.set(a.n() + i, a.n() + j, b(i, j));
    return m;
}

int packed_bits(int p) { return p == 2 ? 1 : 3; }

std::size_t packed_words(int p, int n) {
    return static_cast<std::size_t>((n * n * packed_bits(p) + 31) / 32);
}

void pack(const Matrix& m, perm::KeyWord* out) {
    const int bits = packed_bits(m.p());
    const std::size_t words = packed_words(m.p(), m.n());
    for (std::size_t w = 0; w < words; ++w) out[w] = 0;
    int pos = 0;
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j, pos += bits) {
            std::uint64_t v = m(i, j);
            out[pos / 32] |= static_cast<perm::KeyWord>(v << (pos % 32));
            if (pos % 32 + bits > 32) out[pos / 32 + 1] |= static_cast<perm::KeyWord>(v >> (32 - pos % 32));
        }
}

Matrix unpack(int p, int n, const perm::KeyWord* in) {
    Matrix m(p, n);
    const int bits = packed_bits(p);
    const unsigned mask = (1u << bits) - 1;
    int pos = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j, pos += bits) {
            std::uint64_t w = in[pos / 32];
            if (pos % 32 + bits > 32) w |= static_cast<std::uint64_t>(in[pos / 32 + 1]) << 32;
            unsigned v = static_cast<unsigned>(w >> (pos % 32)) & mask;
            if (static_cast<int>(v) >= p) throw Error("packed matrix entry out of range");
            m.set(i, j, v);
        }
    return m;
}

MatrixAction::MatrixAction(int p_, int n_) : p(p_), n(n_) {
    require_prime(p);
    std::uint64_t d = ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(n)) - 1;
    if (d > (1u << 24)) throw Unsupported("vector space too large for a point action");
    degree_ = d;
}

perm::Point MatrixAction::image(const Matrix& g, perm::Point x) const {
    return vec_index(g.apply(vec_from_index(x + 1, n, p)), p) - 1;
}

}  // namespace cosetlab::mat
