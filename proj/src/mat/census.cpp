#include "cosetlab/mat/census.hpp"

#include <algorithm>
#include <vector>

#include "cosetlab/error.hpp"
#include "cosetlab/mat/field.hpp"
#include "cosetlab/mat/matrix.hpp"

namespace cosetlab::mat {

namespace {

// Calls fn(basis) for every k-subspace, each given by its reduced echelon basis.
template <class Fn>
void for_each_subspace(int p, int n, int k, Fn&& fn) {
    std::vector<int> piv(k);
    auto choose = [&](auto&& self, int idx, int start) -> void {
        if (idx == k) {
            // Free entries: row r may be nonzero at non-pivot columns right of piv[r].
            std::vector<std::pair<int, int>> free;
            for (int r = 0; r < k; ++r)
                for (int c = piv[r] + 1; c < n; ++c)
                    if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(r, c);
            std::uint64_t combos = ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(free.size()));
            std::vector<Vec> basis(k, Vec(n));
            for (std::uint64_t code = 0; code < combos; ++code) {
                for (int r = 0; r < k; ++r) {
                    basis[r] = Vec(n);
                    basis[r].c[piv[r]] = 1;
                }
                std::uint64_t x = code;
                for (auto [r, c] : free) {
                    basis[r].c[c] = static_cast<std::uint8_t>(x % static_cast<std::uint64_t>(p));
                    x /= static_cast<std::uint64_t>(p);
                }
                fn(basis);
            }
            return;
        }
        for (int c = start; c <= n - (k - idx); ++c) {
            piv[idx] = c;
            self(self, idx + 1, c + 1);
        }
    };
    choose(choose, 0, 0);
}

}  // namespace

std::uint64_t count_totally_singular_subspaces(const FormSpec& form, int k) {
    if (form.kind == FormKind::none) throw Unsupported("totally singular subspaces need a form");
    if (k < 0 || k > form.n) return 0;
    if (k == 0) return 1;
    std::uint64_t count = 0;
    for_each_subspace(form.p, form.n, k, [&](const std::vector<Vec>& b) {
        for (int i = 0; i < k; ++i) {
            if (form.is_quadratic() && form.Q(b[i]) != 0) return;
            for (int j = i + 1; j < k; ++j)
                if (form.B(b[i], b[j]) != 0) return;
        }
        ++count;
    });
    return count;
}

std::uint64_t count_nondegenerate_forms(int k, int p, bool alternating) {
    if (k == 0) return 1;
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < k; ++i)
        for (int j = alternating ? i + 1 : i; j < k; ++j) slots.emplace_back(i, j);
    std::uint64_t combos = ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(slots.size()));
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < combos; ++code) {
        Matrix m(p, k);
        std::uint64_t x = code;
        for (auto [i, j] : slots) {
            int v = static_cast<int>(x % static_cast<std::uint64_t>(p));
            x /= static_cast<std::uint64_t>(p);
            m.set(i, j, v);
            m.set(j, i, alternating ? -v : v);
        }
        if (m.determinant() != 0) ++count;
    }
    return count;
}

std::uint64_t count_square_zero_isometries(const FormSpec& form, int k) {
    return count_totally_singular_subspaces(form, k) * count_nondegenerate_forms(k, form.p, true);
}

}  // namespace cosetlab::mat
