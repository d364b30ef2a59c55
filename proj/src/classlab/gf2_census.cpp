#include "cosetlab/classlab/gf2_census.hpp"

#include <algorithm>

#include "cosetlab/error.hpp"
#include "cosetlab/kernels/gf2_scan.hpp"

namespace cosetlab::classlab {

using kernels::Gf2x8;

namespace {

std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    return x ^ (x >> 33);
}

bool in_coset(Gf2x8 m, Gf2x8 id, Coset c) {
    if (c == Coset::any) return true;
    bool outer = kernels::gf2_rank(m ^ id) & 1;
    return outer == (c == Coset::outer);
}

struct CensusAcc {
    std::uint64_t scanned = 0;
    std::map<std::uint32_t, std::uint64_t> counts;
    // (hash, element), kept as the smallest hashes
    std::map<std::uint32_t, std::vector<std::pair<std::uint64_t, Gf2x8>>> samples;
};

void keep_sample(std::vector<std::pair<std::uint64_t, Gf2x8>>& v, std::uint64_t h, Gf2x8 m, std::size_t k) {
    if (k == 0) return;
    if (v.size() == k && h >= v.back().first) return;
    v.insert(std::lower_bound(v.begin(), v.end(), std::make_pair(h, m)), {h, m});
    if (v.size() > k) v.pop_back();
}

void check_group(const mat::MatrixGroup& g) {
    if (g.action().p != 2 || g.action().n > 8) throw Unsupported("GF(2) scans need p = 2 and n <= 8");
}

JordanCensus finish(const CensusAcc& acc, int n) {
    JordanCensus out;
    out.scanned = acc.scanned;
    out.counts = acc.counts;
    for (const auto& [code, v] : acc.samples)
        for (const auto& [h, m] : v) out.samples[code].push_back(kernels::from_gf2(m, n));
    return out;
}

}  // namespace

JordanCensus two_element_census(const mat::MatrixGroup& g, Coset coset, std::size_t samples_per_type,
                                std::uint64_t seed, kernels::Exec exec) {
    check_group(g);
    const int n = g.action().n;
    const Gf2x8 id = kernels::gf2_identity(n);
    auto L = kernels::gf2_levels(g);
    auto acc = kernels::scan_gf2(
        L, exec, CensusAcc{},
        [&](CensusAcc& a, Gf2x8 m) {
            ++a.scanned;
            if (!in_coset(m, id, coset) || !kernels::gf2_is_two_element(m, n)) return;
            std::uint32_t code = kernels::gf2_jordan_code(m, n);
            ++a.counts[code];
            keep_sample(a.samples[code], mix(m ^ seed), m, samples_per_type);
        },
        [&](CensusAcc& into, const CensusAcc& from) {
            into.scanned += from.scanned;
            for (const auto& [k, v] : from.counts) into.counts[k] += v;
            for (const auto& [k, v] : from.samples)
                for (const auto& [h, m] : v) keep_sample(into.samples[k], h, m, samples_per_type);
        });
    return finish(acc, n);
}

JordanCensus two_element_census_reference(const mat::MatrixGroup& g, Coset coset, std::size_t samples_per_type,
                                          std::uint64_t seed) {
    check_group(g);
    const int n = g.action().n;
    const Gf2x8 id = kernels::gf2_identity(n);
    auto acc = kernels::scan_gf2_reference(g, CensusAcc{}, [&](CensusAcc& a, Gf2x8 m) {
        ++a.scanned;
        if (!in_coset(m, id, coset) || !kernels::gf2_is_two_element(m, n)) return;
        auto parts = kernels::gf2_jordan(m, n);
        std::uint32_t code = 0;
        for (int q : parts) code = code * 10 + static_cast<std::uint32_t>(q);
        ++a.counts[code];
        keep_sample(a.samples[code], mix(m ^ seed), m, samples_per_type);
    });
    return finish(acc, n);
}

EliminationScan non_two_product_scan(const mat::MatrixGroup& g, const std::vector<mat::Matrix>& xs, Coset coset,
                                     std::uint64_t order, kernels::Exec exec) {
    check_group(g);
    const int n = g.action().n;
    const Gf2x8 id = kernels::gf2_identity(n);
    std::vector<Gf2x8> px;
    for (const auto& x : xs) px.push_back(kernels::to_gf2(x));
    struct Acc {
        std::uint64_t scanned = 0, targets = 0, unresolved = 0;
        std::optional<Gf2x8> first;
    };
    auto L = kernels::gf2_levels(g);
    auto acc = kernels::scan_gf2(
        L, exec, Acc{},
        [&](Acc& a, Gf2x8 y) {
            ++a.scanned;
            if (!in_coset(y, id, coset) || kernels::gf2_two_power_order(y, n) != order) return;
            ++a.targets;
            for (Gf2x8 x : px)
                if (!kernels::gf2_is_two_element(kernels::gf2_mul(x, y), n)) return;
            ++a.unresolved;
            if (!a.first) a.first = y;
        },
        [](Acc& into, const Acc& from) {
            into.scanned += from.scanned;
            into.targets += from.targets;
            into.unresolved += from.unresolved;
            if (!into.first) into.first = from.first;
        });
    EliminationScan out;
    out.scanned = acc.scanned;
    out.targets = acc.targets;
    out.unresolved = acc.unresolved;
    if (acc.first) out.first_unresolved = kernels::from_gf2(*acc.first, n);
    return out;
}

std::string jordan_code_string(std::uint32_t code) {
    std::vector<int> parts;
    for (; code; code /= 10) parts.push_back(static_cast<int>(code % 10));
    std::reverse(parts.begin(), parts.end());
    std::string out;
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (!out.empty()) out += '.';
        out += std::to_string(parts[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

}  // namespace cosetlab::classlab
