#include "cosetlab/mat/field.hpp"

#include <numeric>
#include <string>

#include "cosetlab/error.hpp"

namespace cosetlab::mat {

bool supported_prime(int p) { return p == 2 || p == 3 || p == 5 || p == 7; }

void require_prime(int p) {
    if (!supported_prime(p)) throw Unsupported("field size " + std::to_string(p) + " is not one of 2, 3, 5, 7");
}

int inv_mod(int a, int p) {
    a = mod(a, p);
    if (a == 0) throw Error("inverse of zero in GF(" + std::to_string(p) + ")");
    for (int b = 1; b < p; ++b)
        if (a * b % p == 1) return b;
    throw Error("no inverse");
}

int primitive_root(int p) {
    for (int g = 1; g < p; ++g) {
        int x = 1, ord = 0;
        do {
            x = x * g % p;
            ++ord;
        } while (x != 1);
        if (ord == p - 1) return g;
    }
    return 1;
}

bool is_square(int a, int p) {
    a = mod(a, p);
    for (int x = 0; x < p; ++x)
        if (x * x % p == a) return true;
    return false;
}

int smallest_nonsquare(int p) {
    for (int a = 2; a < p; ++a)
        if (!is_square(a, p)) return a;
    throw Unsupported("GF(2) has no nonsquares");
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i)
        if (__builtin_mul_overflow(r, base, &r)) throw Unsupported("integer overflow in power");
    return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a / std::gcd(a, b), b, &r)) throw Unsupported("integer overflow in lcm");
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> f;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        f.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) f.push_back(n);
    return f;
}

}  // namespace cosetlab::mat
