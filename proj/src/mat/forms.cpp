#include "cosetlab/mat/forms.hpp"

#include "cosetlab/error.hpp"
#include "cosetlab/mat/field.hpp"

namespace cosetlab::mat {

std::string to_string(FormKind k) {
    switch (k) {
        case FormKind::none: return "none";
        case FormKind::symplectic: return "symplectic";
        case FormKind::quadratic_plus: return "quadratic_plus";
        case FormKind::quadratic_minus: return "quadratic_minus";
        case FormKind::symmetric_odd: return "symmetric_odd";
    }
    return "?";
}

int FormSpec::B(const Vec& u, const Vec& w) const {
    long long s = 0;
    for (int i = 0; i < n; ++i) {
        if (!u.c[i]) continue;
        for (int j = 0; j < n; ++j) s += static_cast<long long>(u.c[i]) * gram(i, j) * w.c[j];
    }
    return mod(s, p);
}

int FormSpec::Q(const Vec& v) const {
    long long s = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) s += static_cast<long long>(quad(i, j)) * v.c[i] * v.c[j];
    return mod(s, p);
}

bool FormSpec::preserved_by(const Matrix& m) const {
    if (m.p() != p || m.n() != n) return false;
    if (!(m * gram * m.transpose() == gram)) return false;
    if (is_quadratic())
        for (int i = 0; i < n; ++i)
            if (Q(m.row(i)) != quad(i, i)) return false;
    return true;
}

bool FormSpec::singular(const Vec& v) const { return is_quadratic() ? Q(v) == 0 : true; }

FormSpec standard_form(FormKind kind, int p, int n) {
    require_prime(p);
    FormSpec f;
    f.kind = kind;
    f.p = p;
    f.n = n;
    f.gram = Matrix(p, n);
    f.quad = Matrix(p, n);
    auto hyperbolic = [&](int pairs) {
        for (int i = 0; i < pairs; ++i) f.quad.set(2 * i, 2 * i + 1, 1);
    };
    switch (kind) {
        case FormKind::symplectic:
            if (n % 2) throw Unsupported("symplectic form needs even dimension");
            for (int i = 0; i < n / 2; ++i) {
                f.gram.set(2 * i, 2 * i + 1, 1);
                f.gram.set(2 * i + 1, 2 * i, -1);
            }
            return f;
        case FormKind::quadratic_plus:
            if (n % 2) throw Unsupported("plus-type quadratic form needs even dimension");
            hyperbolic(n / 2);
            break;
        case FormKind::quadratic_minus: {
            if (n % 2 || n < 2) throw Unsupported("minus-type quadratic form needs even dimension");
            hyperbolic(n / 2 - 1);
            // x^2 + xy + c y^2 is anisotropic when 1 - 4c is a nonsquare (c = 1 for p = 2).
            int c = 1;
            if (p != 2)
                for (c = 1; c < p; ++c)
                    if (!is_square(1 - 4 * c, p)) break;
            f.quad.set(n - 2, n - 2, 1);
            f.quad.set(n - 2, n - 1, 1);
            f.quad.set(n - 1, n - 1, c);
            break;
        }
        case FormKind::symmetric_odd:
            if (n % 2 == 0 || p == 2) throw Unsupported("odd orthogonal form needs odd dimension and odd p");
            hyperbolic(n / 2);
            f.quad.set(n - 1, n - 1, 1);
            break;
        case FormKind::none:
            return f;
    }
    // Polarization B(u,w) = Q(u+w) - Q(u) - Q(w).
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long long v = (i == j) ? 2 * f.quad(i, i) : (i < j ? f.quad(i, j) : f.quad(j, i));
            f.gram.set(i, j, v);
        }
    return f;
}

bool orthogonal_inner(const FormSpec& f, const Matrix& g) {
    if (!f.is_quadratic()) throw Unsupported("inner/outer label needs an orthogonal form");
    if (f.p == 2) return (g - Matrix::identity(f.p, f.n)).rank() % 2 == 0;
    return g.determinant() == 1;
}

}  // namespace cosetlab::mat
