#include "cosetlab/mat/flags.hpp"

#include <algorithm>
#include <set>

#include "cosetlab/error.hpp"
#include "cosetlab/mat/field.hpp"

namespace cosetlab::mat {

Vec Subspace::reduce(const Vec& v) const {
    Vec w = v;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        int c = pivots_[r];
        if (w.c[c]) w = mat::add(w, scale(rows_[r], p_ - w.c[c], p_), p_);
    }
    return w;
}

bool Subspace::contains(const Vec& v) const { return reduce(v).is_zero(); }

bool Subspace::add(const Vec& v) {
    Vec w = reduce(v);
    if (w.is_zero()) return false;
    rows_.push_back(normalize(w, p_));
    canonicalize();
    return true;
}

void Subspace::canonicalize() {
    // Full reduced row echelon form, rows ordered by pivot.
    std::vector<Vec> rows = rows_;
    std::vector<Vec> out;
    std::vector<int> piv;
    for (int c = 0; c < n_; ++c) {
        auto it = std::find_if(rows.begin(), rows.end(), [&](const Vec& r) { return r.c[c] != 0; });
        if (it == rows.end()) continue;
        Vec pr = scale(*it, inv_mod(it->c[c], p_), p_);
        rows.erase(it);
        for (auto& r : rows)
            if (r.c[c]) r = mat::add(r, scale(pr, p_ - r.c[c], p_), p_);
        for (auto& r : out)
            if (r.c[c]) r = mat::add(r, scale(pr, p_ - r.c[c], p_), p_);
        out.push_back(pr);
        piv.push_back(c);
    }
    rows_ = std::move(out);
    pivots_ = std::move(piv);
}

bool Subspace::stable_under(const Matrix& g) const {
    for (const Vec& r : rows_)
        if (!contains(g.apply(r))) return false;
    return true;
}

std::optional<Flag> common_flag(const std::vector<Matrix>& elements) {
    if (elements.empty()) throw Error("common_flag: no elements");
    const int p = elements[0].p(), n = elements[0].n();
    if (n > 4 || p > 3) throw Unsupported("common_flag supports n <= 4 and p <= 3");
    const std::uint32_t total = static_cast<std::uint32_t>(ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(n)));
    Flag flag;
    auto rec = [&](auto&& self, const Subspace& cur) -> bool {
        if (cur.dim() == n - 1) return true;
        std::vector<std::vector<Vec>> seen;
        for (std::uint32_t idx = 1; idx < total; ++idx) {
            Vec v = vec_from_index(idx, n, p);
            if (cur.contains(v)) continue;
            Subspace next = cur;
            next.add(v);
            if (std::find(seen.begin(), seen.end(), next.basis()) != seen.end()) continue;
            seen.push_back(next.basis());
            bool ok = std::all_of(elements.begin(), elements.end(), [&](const Matrix& g) { return next.stable_under(g); });
            if (!ok) continue;
            flag.chain.push_back(next);
            if (self(self, next)) return true;
            flag.chain.pop_back();
        }
        return false;
    };
    if (n == 1) return flag;
    if (rec(rec, Subspace(p, n))) return flag;
    return std::nullopt;
}

namespace {

// Span of matrices, kept as reduced rows of their n^2 entries.
class MatrixSpan {
public:
    MatrixSpan(int p, int n) : p_(p), n_(n) {}

    bool add(const Matrix& m) {
        std::vector<int> v(static_cast<std::size_t>(n_ * n_));
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c) v[static_cast<std::size_t>(r * n_ + c)] = m(r, c);
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            int c = v[pivots_[k]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] = mod(v[j] - c * rows_[k][j], p_);
        }
        auto it = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
        if (it == v.end()) return false;
        auto piv = static_cast<std::size_t>(it - v.begin());
        int s = inv_mod(v[piv], p_);
        for (auto& x : v) x = mod(x * s, p_);
        rows_.push_back(std::move(v));
        pivots_.push_back(piv);
        members_.push_back(m);
        return true;
    }
    const std::vector<Matrix>& members() const { return members_; }
    bool empty() const { return members_.empty(); }

private:
    int p_, n_;
    std::vector<std::vector<int>> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<Matrix> members_;  // the independent matrices added, a basis
};

// Closes a span under right multiplication (and left too when both_sides).
MatrixSpan close_under(MatrixSpan s, const std::vector<Matrix>& gens, bool both_sides) {
    for (std::size_t i = 0; i < s.members().size(); ++i)
        for (const auto& g : gens) {
            Matrix b = s.members()[i];
            s.add(b * g);
            if (both_sides) s.add(g * b);
        }
    return s;
}

}  // namespace

bool common_flag_over_closure(const std::vector<Matrix>& elements) {
    if (elements.empty()) return true;
    const int p = elements[0].p(), n = elements[0].n();
    MatrixSpan ideal(p, n);
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = i + 1; j < elements.size(); ++j)
            ideal.add(elements[i] * elements[j] - elements[j] * elements[i]);
    ideal = close_under(ideal, elements, true);
    // The ideal lies in the radical iff it is nilpotent, and then J^n = 0.
    MatrixSpan power = ideal;
    for (int k = 1; k < n && !power.empty(); ++k) {
        MatrixSpan next(p, n);
        for (const auto& a : power.members())
            for (const auto& b : ideal.members()) next.add(a * b);
        power = next;
    }
    return power.empty();
}

}  // namespace cosetlab::mat
