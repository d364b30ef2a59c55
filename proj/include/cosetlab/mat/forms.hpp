#pragma once

#include <string>

#include "cosetlab/mat/matrix.hpp"

namespace cosetlab::mat {

enum class FormKind { none, symplectic, quadratic_plus, quadratic_minus, symmetric_odd };

std::string to_string(FormKind k);

// Fixed standard forms. Coordinates come in hyperbolic pairs (x_{2i}, x_{2i+1}):
//   symplectic:      B = sum x_{2i} y_{2i+1} - x_{2i+1} y_{2i}
//   quadratic_plus:  Q = sum x_{2i} x_{2i+1}
//   quadratic_minus: as plus on the first n-2 coordinates, plus an
//                    anisotropic tail x^2 + xy + c y^2
//   symmetric_odd:   as plus on the first n-1 coordinates, plus x_{n-1}^2
struct FormSpec {
    FormKind kind = FormKind::none;
    int p = 2;
    int n = 0;
    Matrix gram;  // bilinear form B (the polarization for quadratic kinds)
    Matrix quad;  // upper-triangular coefficients of Q; zero for symplectic

    bool is_quadratic() const { return kind != FormKind::none && kind != FormKind::symplectic; }
    int B(const Vec& u, const Vec& w) const;
    int Q(const Vec& v) const;
    // Exact preservation test: Gram identity M B M^T = B, and for quadratic
    // kinds Q(e_i M) = Q(e_i) on the basis (the Gram identity covers the sums).
    bool preserved_by(const Matrix& m) const;
    // A vector is singular if Q(v) = 0 (quadratic) or always (symplectic).
    bool singular(const Vec& v) const;
};

FormSpec standard_form(FormKind kind, int p, int n);

// Inner/outer label for the orthogonal group: true iff g lies in the index-2
// subgroup (Dickson invariant 0 for p = 2, determinant 1 for p odd).
bool orthogonal_inner(const FormSpec& f, const Matrix& g);

}  // namespace cosetlab::mat
