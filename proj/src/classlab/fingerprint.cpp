#include "cosetlab/classlab/fingerprint.hpp"

#include <sstream>

#include "cosetlab/classlab/element_ops.hpp"
#include "cosetlab/mat/jordan.hpp"

namespace cosetlab::classlab {

namespace {

std::string partition_string(const std::vector<std::size_t>& parts) {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (i) os << '.';
        os << parts[i];
        if (j - i > 1) os << '^' << (j - i);
        i = j;
    }
    return os.str();
}

template <class Fn>
std::string over_divisors(std::uint64_t order, Fn&& fn) {
    std::ostringstream os;
    for (std::uint64_t d = 1; d < order; ++d)
        if (order % d == 0) os << d << ':' << fn(d) << ';';
    return os.str();
}

}  // namespace

std::string Fingerprint::str() const {
    std::string s = "o=" + std::to_string(order) + "|" + profile;
    if (!jordan.empty()) s += "|" + jordan;
    if (!coset.empty()) s += "|" + coset;
    return s;
}

std::string cycle_type_string(const perm::Permutation& g) { return partition_string(g.cycle_type()); }

Fingerprint fingerprint(const perm::Permutation& g, const std::string& coset) {
    Fingerprint f;
    f.order = element_order(g);
    f.profile = over_divisors(f.order, [&](std::uint64_t d) { return cycle_type_string(pow_elt(g, d)); });
    f.coset = coset;
    return f;
}

Fingerprint fingerprint(const mat::Matrix& g, const std::string& coset) {
    Fingerprint f;
    f.order = element_order(g);
    const auto id = mat::Matrix::identity(g.p(), g.n());
    f.profile = over_divisors(f.order, [&](std::uint64_t d) { return g.n() - (pow_elt(g, d) - id).rank(); });
    auto [s, u] = mat::split_parts(g, f.order, g.p(), [](const mat::Matrix& m, std::uint64_t e) { return pow_elt(m, e); });
    std::ostringstream os;
    os << "u=" << mat::jordan_type(u).str() << ",s=";
    for (int c : mat::char_poly(s)) os << c;
    f.jordan = os.str();
    f.coset = coset;
    return f;
}

}  // namespace cosetlab::classlab
