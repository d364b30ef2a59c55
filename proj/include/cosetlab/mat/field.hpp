#pragma once

#include <cstdint>
#include <vector>

namespace cosetlab::mat {

bool supported_prime(int p);
void require_prime(int p);  // throws Unsupported unless p in {2,3,5,7}

inline int mod(long long a, int p) {
    long long r = a % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

int inv_mod(int a, int p);
int primitive_root(int p);
bool is_square(int a, int p);
int smallest_nonsquare(int p);  // p odd
// Integer power with overflow check.
std::uint64_t ipow(std::uint64_t base, unsigned e);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);  // distinct, ascending

}  // namespace cosetlab::mat
