#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "cosetlab/mat/matrix.hpp"
#include "cosetlab/perm/permutation.hpp"

namespace cosetlab::classlab {

// Conjugation-invariant profile of an element. Equal classes give equal
// fingerprints; the converse need not hold.
struct Fingerprint {
    std::uint64_t order = 1;
    std::string profile;  // per divisor d of the order: cycle type or fixed-space dimension of g^d
    std::string jordan;   // matrices: Jordan type of u and char poly of s
    std::string coset;    // optional label of the coset of a normal subgroup

    std::string str() const;
    friend bool operator==(const Fingerprint& a, const Fingerprint& b) { return a.str() == b.str(); }
};

std::string cycle_type_string(const perm::Permutation& g);  // "4.2^2.1^2"

Fingerprint fingerprint(const perm::Permutation& g, const std::string& coset = "");
Fingerprint fingerprint(const mat::Matrix& g, const std::string& coset = "");

template <class E>
using CosetLabel = std::function<std::string(const E&)>;

}  // namespace cosetlab::classlab
