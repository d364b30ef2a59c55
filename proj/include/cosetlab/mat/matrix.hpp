#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cosetlab/perm/action.hpp"

namespace cosetlab::mat {

inline constexpr int kMaxDim = 8;

// Row vector over GF(p). Only the first n entries are meaningful.
struct Vec {
    std::array<std::uint8_t, kMaxDim> c{};
    std::uint8_t n = 0;

    Vec() = default;
    explicit Vec(int dim) : n(static_cast<std::uint8_t>(dim)) {}
    static Vec unit(int dim, int i) {
        Vec v(dim);
        v.c[i] = 1;
        return v;
    }
    bool is_zero() const;
    std::uint8_t& operator[](int i) { return c[i]; }
    std::uint8_t operator[](int i) const { return c[i]; }
    friend bool operator==(const Vec& a, const Vec& b) { return a.n == b.n && a.c == b.c; }
};

Vec add(const Vec& a, const Vec& b, int p);
Vec scale(const Vec& a, int s, int p);
// Index in 0..p^n-1 with v_0 as the least significant digit.
std::uint32_t vec_index(const Vec& v, int p);
Vec vec_from_index(std::uint32_t idx, int n, int p);
// Scales v so its first nonzero entry is 1.
Vec normalize(const Vec& v, int p);
std::string to_string(const Vec& v);

// Square matrix over GF(p) acting on row vectors: v -> vM. The product A*B
// is "A then B", matching the permutation convention.
class Matrix {
public:
    Matrix() = default;
    Matrix(int p, int n);  // zero matrix

    static Matrix identity(int p, int n);
    static Matrix from_rows(int p, const std::vector<std::vector<int>>& rows);
    static Matrix diagonal(int p, const std::vector<int>& d);

    int p() const { return p_; }
    int n() const { return n_; }
    std::uint8_t operator()(int r, int c) const { return a_[r * kMaxDim + c]; }
    void set(int r, int c, long long v);
    Vec row(int r) const;
    void set_row(int r, const Vec& v);

    Matrix operator*(const Matrix& b) const;
    Matrix operator+(const Matrix& b) const;
    Matrix operator-(const Matrix& b) const;
    Matrix scaled(int s) const;
    Matrix transpose() const;
    Matrix inverse() const;  // throws if singular
    Matrix pow(long long e) const;
    int determinant() const;
    int rank() const;
    bool is_identity() const;
    bool is_zero() const;
    bool is_scalar() const;

    Vec apply(const Vec& v) const;  // v M

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.p_ == b.p_ && a.n_ == b.n_ && a.a_ == b.a_;
    }
    friend bool operator<(const Matrix& a, const Matrix& b) { return a.a_ < b.a_; }

    std::string to_string() const;  // rows of digits separated by '/'
    std::vector<std::vector<int>> rows() const;

private:
    std::uint8_t p_ = 2;
    std::uint8_t n_ = 0;
    std::array<std::uint8_t, kMaxDim * kMaxDim> a_{};
};

// Block diagonal sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);

// Bits per packed entry: 1 for p = 2, 3 otherwise.
int packed_bits(int p);
std::size_t packed_words(int p, int n);
void pack(const Matrix& m, perm::KeyWord* out);
Matrix unpack(int p, int n, const perm::KeyWord* in);

// Faithful action of a matrix group on the p^n - 1 nonzero vectors. Point k is
// the vector with index k + 1.
struct MatrixAction {
    using Element = Matrix;
    static constexpr bool key_is_base_image = false;

    int p = 2;
    int n = 0;

    MatrixAction() = default;
    MatrixAction(int p_, int n_);

    std::size_t degree() const { return degree_; }
    perm::Point image(const Matrix& g, perm::Point x) const;
    Matrix multiply(const Matrix& a, const Matrix& b) const { return a * b; }
    Matrix inverse(const Matrix& g) const { return g.inverse(); }
    Matrix identity() const { return Matrix::identity(p, n); }
    bool is_identity(const Matrix& g) const { return g.is_identity(); }
    bool equal(const Matrix& a, const Matrix& b) const { return a == b; }
    std::size_t element_bytes() const { return sizeof(Matrix); }
    std::size_t key_width(std::size_t) const { return packed_words(p, n); }
    void encode_key(const Matrix& g, std::span<const perm::Point>, perm::KeyWord* out) const { pack(g, out); }
    Matrix decode_key(const perm::KeyWord* in) const { return unpack(p, n, in); }

    perm::Point point_of(const Vec& v) const { return vec_index(v, p) - 1; }
    Vec vector_of(perm::Point x) const { return vec_from_index(x + 1, n, p); }

private:
    std::size_t degree_ = 0;
};

}  // namespace cosetlab::mat
