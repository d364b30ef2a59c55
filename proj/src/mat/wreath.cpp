#include "cosetlab/mat/wreath.hpp"

#include "cosetlab/error.hpp"
#include "cosetlab/mat/elements.hpp"

namespace cosetlab::mat {

bool WreathSL2::inner(const Matrix& g) const {
    for (int i = 0; i < 2; ++i)
        for (int j = 2; j < 4; ++j)
            if (g(i, j) || g(j, i)) return false;
    return true;
}

WreathSL2 wreath_sl2(int q, std::uint64_t seed) {
    if (q != 3 && q != 5 && q != 7) throw Unsupported("wreath_sl2 supports q in {3, 5, 7}");
    WreathSL2 w;
    w.q = q;
    w.swap = Matrix(q, 4);
    w.swap.set(0, 2, 1);
    w.swap.set(1, 3, 1);
    w.swap.set(2, 0, 1);
    w.swap.set(3, 1, 1);
    Matrix id2 = Matrix::identity(q, 2);
    Matrix t = Matrix::from_rows(q, {{1, 1}, {0, 1}});
    Matrix u = Matrix::from_rows(q, {{1, 0}, {1, 1}});
    w.generators = {w.embed(t, id2), w.embed(u, id2), w.swap};
    w.group = std::make_shared<const MatrixGroup>(
        build_matrix_group(q, 4, w.generators,
                           group_order_formula(GroupSpec{Family::wreath_SL2, 2, q, ActionKind::vectors_nonzero}), seed,
                           "SL(2," + std::to_string(q) + ") wr 2"));
    return w;
}

namespace {

Matrix block(const std::string& kind, const Params& params, const std::string& prefix, int q) {
    if (kind == "identity") return Matrix::identity(q, 2);
    if (kind == "minus_identity") return Matrix::identity(q, 2).scaled(-1);
    if (kind == "transvection") return Matrix::from_rows(q, {{1, 0}, {1, 1}});
    if (kind == "transvection_inverse") return Matrix::from_rows(q, {{1, 0}, {q - 1, 1}});
    Params sub;
    for (const auto& [k, v] : params.values())
        if (k.rfind(prefix, 0) == 0) sub.set(k.substr(prefix.size()), v);
    FormSpec none{FormKind::none, q, 2, Matrix(q, 2), Matrix(q, 2)};
    Matrix m = construct_matrix(kind, sub, Family::SL, none);
    if (m.determinant() != 1) throw Unsupported("wreath block " + kind + " is not in SL(2)");
    return m;
}

}  // namespace

Matrix wreath_element(const std::string& kind, const Params& params, const WreathSL2& w) {
    Matrix g;
    if (kind == "swap") {
        g = w.swap;
    } else if (kind == "pair") {
        g = w.embed(block(params.get_string("a"), params, "a_", w.q), block(params.get_string("b"), params, "b_", w.q));
        if (params.get_int("outer", 0)) g = g * w.swap;
    } else if (kind == "identity") {
        g = Matrix::identity(w.q, 4);
    } else {
        throw Unsupported("unknown wreath element kind '" + kind + "'");
    }
    if (!w.group->contains(g)) throw NotInGroup(kind + " is not in the wreath product");
    return g;
}

}  // namespace cosetlab::mat
