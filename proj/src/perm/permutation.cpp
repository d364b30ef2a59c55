#include "cosetlab/perm/permutation.hpp"

#include <algorithm>
#include <functional>

#include "cosetlab/error.hpp"

namespace cosetlab::perm {

Permutation::Permutation(std::size_t degree) : images_(degree) {
    for (std::size_t i = 0; i < degree; ++i) images_[i] = static_cast<Point>(i);
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (Point p : images_) {
        if (p >= images_.size() || seen[p])
            throw Error("permutation images are not a bijection");
        seen[p] = 1;
    }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
    std::vector<Point> img(degree);
    for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
    std::vector<char> used(degree, 0);
    for (const auto& c : cycles) {
        for (std::size_t k = 0; k < c.size(); ++k) {
            Point a = c[k];
            if (a >= degree) throw Error("cycle point out of range");
            if (used[a]) throw Error("point repeated in cycle notation");
            used[a] = 1;
            img[a] = c[(k + 1) % c.size()];
        }
    }
    return Permutation(std::move(img));
}

Permutation Permutation::unchecked(std::vector<Point> images) {
    Permutation r;
    r.images_ = std::move(images);
    return r;
}

Permutation Permutation::inverse() const {
    std::vector<Point> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
    return unchecked(std::move(inv));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Point Permutation::first_moved() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return static_cast<Point>(i);
    return static_cast<Point>(images_.size());
}

std::vector<std::size_t> Permutation::cycle_type() const {
    std::vector<std::size_t> out;
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
            seen[j] = 1;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::string Permutation::to_cycle_string() const {
    std::string s;
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i] || images_[i] == i) continue;
        s += '(';
        bool first = true;
        for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
            seen[j] = 1;
            if (!first) s += ',';
            s += std::to_string(j + 1);
            first = false;
        }
        s += ')';
    }
    return s.empty() ? "()" : s;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
        throw DegreeMismatch("compose: degrees " + std::to_string(a.degree()) + " and " +
                             std::to_string(b.degree()));
    std::vector<Point> img(a.degree());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = b[a[static_cast<Point>(i)]];
    return Permutation::unchecked(std::move(img));
}

Permutation power(const Permutation& g, long long e) {
    Permutation base = e < 0 ? g.inverse() : g;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    Permutation acc = Permutation::identity(g.degree());
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

}  // namespace cosetlab::perm
