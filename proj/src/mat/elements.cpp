#include "cosetlab/mat/elements.hpp"

#include <mutex>
#include <map>

#include "cosetlab/error.hpp"
#include "cosetlab/mat/field.hpp"
#include "cosetlab/mat/jordan.hpp"
#include "cosetlab/perm/enumerate.hpp"

namespace cosetlab::mat {

namespace {

bool is_orthogonal(Family f) { return f == Family::GO_plus || f == Family::GO_minus || f == Family::SO_odd; }
bool is_linear(Family f) { return f == Family::SL || f == Family::GL || f == Family::SL_dual_ext; }

Matrix form_transvection(const FormSpec& f, const Vec& v, int c) {
    Matrix m(f.p, f.n);
    for (int i = 0; i < f.n; ++i) {
        Vec e = Vec::unit(f.n, i);
        m.set_row(i, add(e, scale(v, c * f.B(e, v), f.p), f.p));
    }
    return m;
}

Vec pair_vector(const FormSpec& f, int e_coef, int f_coef) {
    Vec v(f.n);
    v.c[0] = static_cast<std::uint8_t>(mod(e_coef, f.p));
    v.c[1] = static_cast<std::uint8_t>(mod(f_coef, f.p));
    return v;
}

int pairs_or_throw(Family family, int n, int need, const std::string& kind) {
    int m = hyperbolic_pair_count(family, n);
    if (m < need)
        throw Unsupported(kind + " needs " + std::to_string(need) + " hyperbolic pairs, the form has " + std::to_string(m));
    return m;
}

// Skew (orthogonal) or symmetric (symplectic) matrix of the given rank built
// from 2x2 blocks on the first pairs.
Matrix siegel_matrix(Family family, int p, int m, int rank) {
    Matrix s(p, m);
    if (family == Family::Sp) {
        for (int i = 0; i < rank; ++i) s.set(i, i, 1);
        return s;
    }
    if (rank % 2) throw Unsupported("an alternating matrix has even rank");
    for (int i = 0; i + 1 < rank; i += 2) {
        s.set(i, i + 1, 1);
        s.set(i + 1, i, -1);
    }
    return s;
}

Matrix unipotent_matrix(Family family, const FormSpec& form, const JordanType& jt) {
    const int p = form.p, n = form.n;
    if (jt.dim() != n) throw Unsupported("Jordan type " + jt.str() + " does not have dimension " + std::to_string(n));
    if (is_linear(family)) {
        Matrix g = Matrix::identity(p, n);
        int at = 0;
        for (int k : jt.parts) {
            for (int i = 0; i + 1 < k; ++i) g.set(at + i, at + i + 1, 1);
            at += k;
        }
        return g;
    }
    // Paired blocks (k, k) go into a Levi factor; a lone block of size 2 in
    // the symplectic group is a transvection on one hyperbolic pair.
    const int m = hyperbolic_pair_count(family, n);
    std::map<int, int, std::greater<>> count;
    for (int k : jt.parts) count[k]++;
    Matrix a = Matrix::identity(p, std::max(m, 1));
    Matrix s(p, std::max(m, 1));
    int cur = 0;
    for (auto& [k, c] : count) {
        if (k == 1) continue;
        while (c >= 2) {
            if (cur + k > m) throw Unsupported("Jordan type " + jt.str() + " does not fit the hyperbolic part");
            for (int i = 0; i + 1 < k; ++i) a.set(cur + i, cur + i + 1, 1);
            cur += k;
            c -= 2;
        }
        if (c == 1) {
            if (!(k == 2 && family == Family::Sp))
                throw Unsupported("Jordan type " + jt.str() + ": unpaired block of size " + std::to_string(k) +
                                  " is not constructible here");
            if (cur + 1 > m) throw Unsupported("Jordan type " + jt.str() + " does not fit the hyperbolic part");
            s.set(cur, cur, 1);
            cur += 1;
            c = 0;
        }
    }
    if (m == 0) return Matrix::identity(p, n);
    return levi_element(a, n) * siegel_element(s, n);
}

// An element of order r with eigenvalues outside GF(p) on a 2-dimensional
// anisotropic plane inside the first two hyperbolic pairs.
Matrix rotation_block(int p, int r) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, Matrix> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, r);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    if ((p + 1) % r != 0 || (p - 1) % r == 0)
        throw Unsupported("rotation order " + std::to_string(r) + " must divide p+1 and not p-1");
    ClassicalGroup h = classical_group(GroupSpec{Family::GO_plus, 4, p, ActionKind::vectors_nonzero}, 0);
    std::optional<Matrix> found;
    Matrix id = Matrix::identity(p, 4);
    perm::for_each_element(*h.group, [&](const Matrix& g) {
        if (found) return;
        if ((g - id).rank() != 2 || !g.pow(r).is_identity()) return;
        for (int d = 1; d < r; ++d)
            if (r % d == 0 && g.pow(d).is_identity()) return;
        found = g;
    });
    if (!found) throw Unsupported("no rotation of order " + std::to_string(r));
    cache.emplace(key, *found);
    return *found;
}

Matrix semisimple_matrix(Family family, const FormSpec& form, const Params& params) {
    const int p = form.p, n = form.n;
    std::vector<long long> ev = params.has("eigenvalues") ? params.get_list("eigenvalues") : std::vector<long long>{};
    if (is_linear(family)) {
        if (static_cast<int>(ev.size()) != n) throw Unsupported("semisimple: need one eigenvalue per coordinate");
        Matrix g(p, n);
        for (int i = 0; i < n; ++i) {
            if (mod(ev[i], p) == 0) throw Unsupported("semisimple: zero eigenvalue");
            g.set(i, i, ev[i]);
        }
        return g;
    }
    const int m = hyperbolic_pair_count(family, n);
    Matrix g = Matrix::identity(p, n);
    int first_pair = 0;
    if (params.has("rotation_order")) {
        if (!is_orthogonal(family)) throw Unsupported("rotation_order needs an orthogonal group");
        pairs_or_throw(family, n, 2, "rotation_order");
        Matrix r = rotation_block(p, static_cast<int>(params.get_int("rotation_order")));
        g = direct_sum(r, Matrix::identity(p, n - 4));
        first_pair = 2;
    }
    if (first_pair + static_cast<int>(ev.size()) > m) throw Unsupported("semisimple: more eigenvalues than hyperbolic pairs");
    for (std::size_t i = 0; i < ev.size(); ++i) {
        int lam = mod(ev[i], p);
        if (lam == 0) throw Unsupported("semisimple: zero eigenvalue");
        int k = first_pair + static_cast<int>(i);
        g.set(2 * k, 2 * k, lam);
        g.set(2 * k + 1, 2 * k + 1, inv_mod(lam, p));
    }
    return g;
}

Matrix literal_matrix(int p, int n, const std::string& text) {
    std::vector<std::vector<int>> rows(1);
    for (char c : text) {
        if (c == '/') {
            rows.emplace_back();
        } else if (c >= '0' && c <= '9') {
            if (c - '0' >= p) throw Unsupported("literal: digit " + std::string(1, c) + " not below p");
            rows.back().push_back(c - '0');
        } else if (c != ' ') {
            throw Unsupported("literal: unexpected character '" + std::string(1, c) + "'");
        }
    }
    if (static_cast<int>(rows.size()) != n) throw Unsupported("literal: expected " + std::to_string(n) + " rows");
    Matrix g = Matrix::from_rows(p, rows);
    if (g.determinant() == 0) throw Unsupported("literal: matrix is singular");
    return g;
}

bool alternating_difference(const FormSpec& f, const Matrix& g) {
    Matrix nmat = g - Matrix::identity(f.p, f.n);
    for (int i = 0; i < f.n; ++i) {
        Vec ei = Vec::unit(f.n, i);
        if (f.B(nmat.apply(ei), ei) != 0) return false;
        for (int j = i + 1; j < f.n; ++j) {
            Vec ej = Vec::unit(f.n, j);
            if ((f.B(nmat.apply(ei), ej) + f.B(nmat.apply(ej), ei)) % f.p != 0) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<std::string> matrix_element_kinds() {
    return {"identity",     "transvection",   "reflection", "long_root_element", "pseudoreflection", "unipotent",
            "semisimple",   "alt_involution", "siegel",     "gl_centralizer",    "literal"};
}

Matrix jordan_block(int p, int size) {
    Matrix g = Matrix::identity(p, size);
    for (int i = 0; i + 1 < size; ++i) g.set(i, i + 1, 1);
    return g;
}

Matrix construct_matrix(const std::string& kind, const Params& params, Family family, const FormSpec& form) {
    const int p = form.p, n = form.n;
    if (kind == "identity") return Matrix::identity(p, n);
    if (kind == "literal") return literal_matrix(p, n, params.get_string("matrix"));
    if (kind == "transvection") {
        int a = static_cast<int>(params.get_int("scalar", 1));
        if (is_linear(family)) {
            Matrix g = Matrix::identity(p, n);
            g.set(1, 0, a);
            return g;
        }
        if (family == Family::Sp) {
            Matrix s(p, n / 2);
            s.set(0, 0, a);
            return siegel_element(s, n);
        }
        if (is_orthogonal(family) && p == 2) {
            pairs_or_throw(family, n, 1, kind);
            return form_transvection(form, pair_vector(form, 1, 1), 1);
        }
        throw Unsupported("transvection is not available in " + to_string(family) + " over GF(" + std::to_string(p) + ")");
    }
    if (kind == "reflection") {
        if (!is_orthogonal(family) || p == 2)
            throw Unsupported("reflection needs an orthogonal group in odd characteristic");
        pairs_or_throw(family, n, 1, kind);
        int norm = mod(params.get_int("norm", 1), p);
        if (norm == 0) throw Unsupported("reflection: norm must be nonzero");
        Vec v = pair_vector(form, 1, norm);
        return form_transvection(form, v, mod(-static_cast<long long>(inv_mod(form.Q(v), p)), p));
    }
    if (kind == "long_root_element") {
        if (is_linear(family) || family == Family::Sp) return construct_matrix("transvection", {}, family, form);
        if (is_orthogonal(family)) {
            int m = pairs_or_throw(family, n, 2, kind);
            return siegel_element(siegel_matrix(family, p, m, 2), n);
        }
        throw Unsupported("long_root_element is not available in " + to_string(family));
    }
    if (kind == "pseudoreflection") {
        if (!is_linear(family)) throw Unsupported("pseudoreflection needs a linear group");
        int a = mod(params.get_int("eigenvalue"), p);
        if (a == 0 || a == 1) throw Unsupported("pseudoreflection: eigenvalue must differ from 0 and 1");
        Matrix g = Matrix::identity(p, n);
        g.set(0, 0, a);
        return g;
    }
    if (kind == "unipotent") return unipotent_matrix(family, form, JordanType::parse(params.get_string("jordan"), p));
    if (kind == "semisimple") return semisimple_matrix(family, form, params);
    if (kind == "alt_involution" || kind == "siegel") {
        if (kind == "alt_involution" && p != 2) throw Unsupported("alt_involution needs characteristic 2");
        if (!(family == Family::Sp || is_orthogonal(family))) throw Unsupported(kind + " needs a form");
        int rank = static_cast<int>(params.get_int("rank", 2));
        int m = pairs_or_throw(family, n, rank, kind);
        if (kind == "alt_involution" && family == Family::Sp) {
            if (rank % 2) throw Unsupported("alt_involution: rank must be even");
            Matrix s(p, m);
            for (int i = 0; i + 1 < rank; i += 2) {
                s.set(i, i + 1, 1);
                s.set(i + 1, i, 1);
            }
            return siegel_element(s, n);
        }
        return siegel_element(siegel_matrix(family, p, m, rank), n);
    }
    if (kind == "gl_centralizer") {
        if (family != Family::GO_plus || p == 2) throw Unsupported("gl_centralizer needs GO_plus in odd characteristic");
        const int m = n / 2;
        Matrix a(p, m);
        int s = -1;
        for (int x = 1; x < p; ++x)
            if (x * x % p == p - 1) s = x;
        if (s > 0) {
            a = Matrix::identity(p, m).scaled(s);
        } else {
            if (m % 2) throw Unsupported("gl_centralizer: odd Levi rank with -1 a nonsquare");
            for (int i = 0; i < m; i += 2) {
                a.set(i, i + 1, 1);
                a.set(i + 1, i, -1);
            }
        }
        return levi_element(a, n);
    }
    throw Unsupported("unknown element kind '" + kind + "'");
}

Matrix element_constructor(const std::string& kind, const Params& params, const ClassicalGroup& g) {
    Matrix x = construct_matrix(kind, params, g.spec.family, g.form);
    if (!g.contains(x)) throw NotInGroup(kind + " is not an element of " + g.spec.str());
    const int p = g.p(), n = g.n();
    Matrix id = Matrix::identity(p, n);
    auto fail = [&](const std::string& why) { throw VerificationFailure(kind + " in " + g.spec.str() + ": " + why); };
    if (kind == "transvection" && (x - id).rank() != 1) fail("rank of g - 1 is not 1");
    if (kind == "reflection" && ((x - id).rank() != 1 || !(x * x).is_identity())) fail("not a reflection");
    if (kind == "unipotent" && !(jordan_type(x) == JordanType::parse(params.get_string("jordan"), p)))
        fail("Jordan type differs from the request");
    if (kind == "alt_involution" && (!(x * x).is_identity() || !alternating_difference(g.form, x)))
        fail("not an alternating involution");
    if (kind == "gl_centralizer" && !(x * x == id.scaled(-1))) fail("square is not -1");
    if (kind == "semisimple" && element_order(x) % static_cast<std::uint64_t>(p) == 0) fail("order divisible by p");
    return x;
}

}  // namespace cosetlab::mat
