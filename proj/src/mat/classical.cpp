#include "cosetlab/mat/classical.hpp"

#include <algorithm>
#include <random>

#include "cosetlab/error.hpp"
#include "cosetlab/mat/field.hpp"

namespace cosetlab::mat {

namespace {

struct FamilyName {
    Family f;
    const char* name;
};
constexpr FamilyName kFamilies[] = {
    {Family::SL, "SL"},           {Family::GL, "GL"},         {Family::Sp, "Sp"},
    {Family::GO_plus, "GO_plus"}, {Family::GO_minus, "GO_minus"}, {Family::SO_odd, "SO_odd"},
    {Family::SL_dual_ext, "SL_dual_ext"}, {Family::wreath_SL2, "wreath_SL2"},
};

struct ActionName {
    ActionKind a;
    const char* name;
};
constexpr ActionName kActions[] = {
    {ActionKind::vectors_nonzero, "vectors_nonzero"},
    {ActionKind::points_projective, "points_projective"},
    {ActionKind::points_nonsingular, "points_nonsingular"},
    {ActionKind::points_singular, "points_singular"},
    {ActionKind::vectors_plus_covectors, "vectors_plus_covectors"},
};

std::uint64_t qpow(int q, int e) { return ipow(static_cast<std::uint64_t>(q), static_cast<unsigned>(e)); }

std::uint64_t sl_order(int n, int q) {
    std::uint64_t o = qpow(q, n * (n - 1) / 2);
    for (int i = 2; i <= n; ++i) o = perm::checked_mul(o, qpow(q, i) - 1);
    return o;
}

}  // namespace

int hyperbolic_pair_count(Family f, int n) {
    switch (f) {
        case Family::Sp:
        case Family::GO_plus: return n / 2;
        case Family::GO_minus: return n / 2 - 1;
        case Family::SO_odd: return (n - 1) / 2;
        default: return 0;
    }
}

namespace {

std::vector<Vec> small_support_vectors(int p, int n, int max_support) {
    std::vector<Vec> out;
    std::uint32_t total = static_cast<std::uint32_t>(qpow(p, n));
    for (std::uint32_t idx = 1; idx < total; ++idx) {
        Vec v = vec_from_index(idx, n, p);
        int s = 0;
        for (int i = 0; i < n; ++i) s += v.c[i] != 0;
        if (s <= max_support) out.push_back(v);
    }
    return out;
}

// w -> w + c B(w,v) v, as a matrix (rows are images of basis vectors).
Matrix form_transvection(const FormSpec& f, const Vec& v, int c) {
    Matrix m(f.p, f.n);
    for (int i = 0; i < f.n; ++i) {
        Vec e = Vec::unit(f.n, i);
        m.set_row(i, add(e, scale(v, c * f.B(e, v), f.p), f.p));
    }
    return m;
}

Matrix reflection_matrix(const FormSpec& f, const Vec& v) {
    // w -> w - B(w,v)/Q(v) v
    return form_transvection(f, v, mod(-static_cast<long long>(inv_mod(f.Q(v), f.p)), f.p));
}

std::vector<Matrix> gl_pool(int p, int m) {
    std::vector<Matrix> out;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            Matrix a = Matrix::identity(p, m);
            a.set(i, j, 1);
            out.push_back(a);
        }
    if (p > 2) {
        Matrix d = Matrix::identity(p, m);
        d.set(0, 0, primitive_root(p));
        out.push_back(d);
    }
    return out;
}

}  // namespace

std::string to_string(Family f) {
    for (auto& x : kFamilies)
        if (x.f == f) return x.name;
    return "?";
}

Family family_from_string(const std::string& s) {
    for (auto& x : kFamilies)
        if (s == x.name) return x.f;
    throw Unsupported("unknown group family '" + s + "'");
}

std::string to_string(ActionKind a) {
    for (auto& x : kActions)
        if (x.a == a) return x.name;
    return "?";
}

ActionKind action_from_string(const std::string& s) {
    for (auto& x : kActions)
        if (s == x.name) return x.a;
    throw Unsupported("unknown action '" + s + "'");
}

SetKind set_kind(ActionKind a) {
    switch (a) {
        case ActionKind::vectors_nonzero: return SetKind::vectors_nonzero;
        case ActionKind::points_projective: return SetKind::points_projective;
        case ActionKind::points_nonsingular: return SetKind::points_nonsingular;
        case ActionKind::points_singular: return SetKind::points_singular;
        case ActionKind::vectors_plus_covectors: break;
    }
    throw Unsupported("points plus hyperplanes is only available for the dual extension");
}

std::string GroupSpec::str() const { return to_string(family) + "(" + std::to_string(n) + "," + std::to_string(q) + ")"; }

FormKind form_kind(Family f) {
    switch (f) {
        case Family::Sp: return FormKind::symplectic;
        case Family::GO_plus: return FormKind::quadratic_plus;
        case Family::GO_minus: return FormKind::quadratic_minus;
        case Family::SO_odd: return FormKind::symmetric_odd;
        default: return FormKind::none;
    }
}

std::uint64_t group_order_formula(const GroupSpec& s) {
    require_prime(s.q);
    const int n = s.n, q = s.q;
    switch (s.family) {
        case Family::SL:
            if (n < 1) break;
            return sl_order(n, q);
        case Family::GL:
            if (n < 1) break;
            return perm::checked_mul(sl_order(n, q), static_cast<std::uint64_t>(q - 1));
        case Family::Sp: {
            if (n % 2 || n < 2) break;
            int m = n / 2;
            std::uint64_t o = qpow(q, m * m);
            for (int i = 1; i <= m; ++i) o = perm::checked_mul(o, qpow(q, 2 * i) - 1);
            return o;
        }
        case Family::GO_plus:
        case Family::GO_minus: {
            if (n % 2 || n < 2) break;
            int m = n / 2;
            std::uint64_t qm = qpow(q, m);
            std::uint64_t o = 2 * qpow(q, m * (m - 1));
            o = perm::checked_mul(o, s.family == Family::GO_plus ? qm - 1 : qm + 1);
            for (int i = 1; i < m; ++i) o = perm::checked_mul(o, qpow(q, 2 * i) - 1);
            return o;
        }
        case Family::SO_odd: {
            if (n % 2 == 0 || q == 2 || n < 3) break;
            int m = (n - 1) / 2;
            std::uint64_t o = qpow(q, m * m);
            for (int i = 1; i <= m; ++i) o = perm::checked_mul(o, qpow(q, 2 * i) - 1);
            return o;
        }
        case Family::SL_dual_ext:
            // PGL_n(q).2; |PGL_n(q)| = |SL_n(q)|.
            if (n < 3) break;
            return perm::checked_mul(2, sl_order(n, q));
        case Family::wreath_SL2: {
            std::uint64_t s2 = sl_order(2, q);
            return perm::checked_mul(2, perm::checked_mul(s2, s2));
        }
    }
    throw Unsupported("no order formula for " + s.str());
}

Matrix levi_element(const Matrix& a, int n) {
    const int m = a.n(), p = a.p();
    Matrix it = a.inverse().transpose();
    Matrix g = Matrix::identity(p, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            g.set(2 * i, 2 * j, a(i, j));
            g.set(2 * i + 1, 2 * j + 1, it(i, j));
        }
    return g;
}

Matrix siegel_element(const Matrix& s, int n) {
    const int m = s.n();
    Matrix g = Matrix::identity(s.p(), n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g.set(2 * i + 1, 2 * j, s(i, j));
    return g;
}

std::vector<Matrix> generator_pool(Family family, const FormSpec& form) {
    const int p = form.p, n = form.n;
    std::vector<Matrix> pool;
    switch (family) {
        case Family::SL:
        case Family::GL: {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i == j) continue;
                    Matrix t = Matrix::identity(p, n);
                    t.set(i, j, 1);
                    pool.push_back(t);
                }
            if (family == Family::GL && p > 2) {
                Matrix d = Matrix::identity(p, n);
                d.set(0, 0, primitive_root(p));
                pool.push_back(d);
            }
            return pool;
        }
        case Family::Sp:
            for (const Vec& w : small_support_vectors(p, n, 2)) pool.push_back(form_transvection(form, w, 1));
            break;
        case Family::GO_plus:
        case Family::GO_minus: {
            for (const Vec& w : small_support_vectors(p, n, 3)) {
                if (form.Q(w) == 0) continue;
                pool.push_back(p == 2 ? form_transvection(form, w, 1) : reflection_matrix(form, w));
            }
            break;
        }
        case Family::SO_odd: {
            std::vector<Matrix> refl;
            for (const Vec& w : small_support_vectors(p, n, 2))
                if (form.Q(w) != 0) refl.push_back(reflection_matrix(form, w));
            for (std::size_t i = 1; i < refl.size(); ++i) {
                pool.push_back(refl[i - 1] * refl[i]);
                pool.push_back(refl[0] * refl[i]);
            }
            break;
        }
        default: throw Unsupported("no generator pool for family " + to_string(family));
    }
    int m = hyperbolic_pair_count(family, n);
    if (m >= 1) {
        for (const Matrix& a : gl_pool(p, m)) pool.push_back(levi_element(a, n));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                if (family == Family::Sp) {
                    if (j < i) continue;
                    Matrix s(p, m);
                    s.set(i, j, 1);
                    s.set(j, i, 1);
                    pool.push_back(siegel_element(s, n));
                } else if (i < j) {
                    Matrix s(p, m);
                    s.set(i, j, 1);
                    s.set(j, i, -1);
                    pool.push_back(siegel_element(s, n));
                }
            }
    }
    return pool;
}

MatrixGroup build_matrix_group(int p, int n, const std::vector<Matrix>& gens, std::optional<std::uint64_t> known_order,
                               std::uint64_t seed, const std::string& provenance) {
    perm::BuildOptions o;
    o.known_order = known_order;
    o.seed = seed;
    o.provenance = provenance;
    return MatrixGroup::build(MatrixAction(p, n), gens, o);
}

bool ClassicalGroup::inner(const Matrix& g) const {
    if (form.is_quadratic() && spec.family != Family::SO_odd) return orthogonal_inner(form, g);
    return true;
}

ClassicalGroup classical_group(const GroupSpec& spec, std::uint64_t seed) {
    require_prime(spec.q);
    if (spec.family == Family::SL_dual_ext || spec.family == Family::wreath_SL2)
        throw Unsupported(spec.str() + " is built by its own constructor");
    if (spec.n < 2 || spec.n > kMaxDim) throw Unsupported("dimension out of range for " + spec.str());
    ClassicalGroup cg;
    cg.spec = spec;
    FormKind fk = form_kind(spec.family);
    cg.form = fk == FormKind::none ? FormSpec{FormKind::none, spec.q, spec.n, Matrix(spec.q, spec.n), Matrix(spec.q, spec.n)}
                                   : standard_form(fk, spec.q, spec.n);
    const std::uint64_t target = group_order_formula(spec);

    std::vector<Matrix> pool = generator_pool(spec.family, cg.form);
    for (const Matrix& g : pool) {
        if (fk != FormKind::none && !cg.form.preserved_by(g))
            throw VerificationFailure("pool element does not preserve the form of " + spec.str());
        if (spec.family == Family::SL || spec.family == Family::SO_odd)
            if (g.determinant() != 1) throw VerificationFailure("pool element of " + spec.str() + " has determinant != 1");
    }
    std::mt19937_64 rng(seed + 0x51ed2701ULL);
    std::shuffle(pool.begin(), pool.end(), rng);

    perm::BuildOptions o;
    o.known_order = target;
    o.seed = seed;
    o.provenance = spec.str() + " from seeded form-preserving generators";
    perm::GroupBuilder<MatrixAction> b(MatrixAction(spec.q, spec.n), o);
    std::size_t next = 0;
    auto add = [&] {
        if (next >= pool.size()) throw OrderMismatch("generator pool of " + spec.str() + " exhausted before reaching order " + std::to_string(target));
        cg.generators.push_back(pool[next]);
        b.add_generator(pool[next++]);
    };
    add();
    if (pool.size() > 1) add();
    while (b.run() != perm::GroupBuilder<MatrixAction>::Status::reached) add();
    cg.group = std::make_shared<const MatrixGroup>(b.finish());
    if (spec.action != ActionKind::vectors_plus_covectors)
        cg.points = std::make_shared<const NumberedSet>(set_kind(spec.action), cg.form);
    else
        throw Unsupported("points plus hyperplanes is only available for the dual extension");
    return cg;
}

}  // namespace cosetlab::mat
