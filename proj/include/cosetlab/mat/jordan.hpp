#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cosetlab/mat/matrix.hpp"

namespace cosetlab::mat {

// Partition of n into Jordan block sizes, descending. The optional tag marks
// labels such as "4.2_0^2" whose subscript distinguishes classes with the same
// partition; it takes no part in equality.
struct JordanType {
    int p = 0;
    std::vector<int> parts;
    std::string tag;

    int dim() const;
    std::string str() const;  // "4.2^2"
    static JordanType parse(const std::string& s, int p = 0);
    friend bool operator==(const JordanType& a, const JordanType& b) { return a.parts == b.parts; }
    friend bool operator<(const JordanType& a, const JordanType& b) { return a.parts < b.parts; }
};

std::uint64_t element_order(const Matrix& g);
bool is_unipotent(const Matrix& g);
JordanType jordan_type(const Matrix& g);  // throws unless g is unipotent
// Coefficients of det(xI - g), leading coefficient first.
std::vector<int> char_poly(const Matrix& g);

// CRT exponents (a, b) with g^a the p'-part and g^b the p-part of an element
// of the given order.
std::pair<std::uint64_t, std::uint64_t> jordan_exponents(std::uint64_t order, int p);

template <class E, class Pow>
std::pair<E, E> split_parts(const E& g, std::uint64_t order, int p, Pow pow) {
    auto [a, b] = jordan_exponents(order, p);
    return {pow(g, a), pow(g, b)};
}

// (semisimple, unipotent) with s*u = u*s = g.
std::pair<Matrix, Matrix> semisimple_unipotent_parts(const Matrix& g);

}  // namespace cosetlab::mat
