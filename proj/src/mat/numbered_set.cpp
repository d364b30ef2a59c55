#include "cosetlab/mat/numbered_set.hpp"

#include "cosetlab/error.hpp"
#include "cosetlab/mat/field.hpp"

namespace cosetlab::mat {

std::string to_string(SetKind k) {
    switch (k) {
        case SetKind::vectors_nonzero: return "vectors_nonzero";
        case SetKind::points_projective: return "points_projective";
        case SetKind::points_nonsingular: return "points_nonsingular";
        case SetKind::points_singular: return "points_singular";
        case SetKind::nondegenerate_one_spaces: return "nondegenerate_one_spaces";
        case SetKind::vectors_of_norm: return "vectors_of_norm";
    }
    return "?";
}

SetKind set_kind_from_string(const std::string& s) {
    for (SetKind k : {SetKind::vectors_nonzero, SetKind::points_projective, SetKind::points_nonsingular,
                      SetKind::points_singular, SetKind::nondegenerate_one_spaces, SetKind::vectors_of_norm})
        if (to_string(k) == s) return k;
    throw Unsupported("unknown point set '" + s + "'");
}

NumberedSet::NumberedSet(SetKind kind, const FormSpec& form, int norm)
    : kind_(kind), p_(form.p), n_(form.n), form_(form) {
    bool needs_quadratic = kind == SetKind::points_nonsingular || kind == SetKind::points_singular ||
                           kind == SetKind::nondegenerate_one_spaces || kind == SetKind::vectors_of_norm;
    if (kind == SetKind::vectors_of_norm && (norm <= 0 || norm >= form.p))
        throw Unsupported("vectors_of_norm needs a nonzero norm value below p");
    if (needs_quadratic && !form.is_quadratic())
        throw Unsupported(to_string(kind) + " needs an orthogonal form");
    projective_ = kind == SetKind::points_projective || kind == SetKind::nondegenerate_one_spaces ||
                  (p_ != 2 && (kind == SetKind::points_nonsingular || kind == SetKind::points_singular));
    std::uint32_t total = static_cast<std::uint32_t>(ipow(static_cast<std::uint64_t>(p_), static_cast<unsigned>(n_)));
    slot_.assign(total, -1);
    for (std::uint32_t idx = 1; idx < total; ++idx) {
        Vec v = vec_from_index(idx, n_, p_);
        if (projective_ && !(normalize(v, p_) == v)) continue;
        bool keep = true;
        switch (kind) {
            case SetKind::vectors_nonzero:
            case SetKind::points_projective: break;
            case SetKind::points_nonsingular:
            case SetKind::nondegenerate_one_spaces: keep = form.Q(v) != 0; break;
            case SetKind::points_singular: keep = form.Q(v) == 0; break;
            case SetKind::vectors_of_norm: keep = form.Q(v) == norm; break;
        }
        if (!keep) continue;
        slot_[idx] = static_cast<std::int32_t>(members_.size());
        members_.push_back(v);
    }
}

long long NumberedSet::index_of(const Vec& v) const {
    Vec w = projective_ ? normalize(v, p_) : v;
    if (w.is_zero()) return -1;
    return slot_[vec_index(w, p_)];
}

std::uint32_t NumberedSet::image(std::uint32_t i, const Matrix& g) const {
    long long j = index_of(g.apply(members_[i]));
    if (j < 0) throw Error("matrix maps a member of " + to_string(kind_) + " outside the set");
    return static_cast<std::uint32_t>(j);
}

perm::Permutation NumberedSet::permutation_of(const Matrix& g) const {
    std::vector<perm::Point> img(size());
    for (std::uint32_t i = 0; i < size(); ++i) img[i] = image(i, g);
    return perm::Permutation(std::move(img));
}

int NumberedSet::norm(std::size_t i) const { return form_.is_quadratic() ? form_.Q(members_[i]) : 0; }

NumberedSet nonsingular_points(const FormSpec& form) { return NumberedSet(SetKind::points_nonsingular, form); }

NumberedSet nondegenerate_one_spaces(const FormSpec& form) {
    return NumberedSet(form.p == 2 ? SetKind::points_nonsingular : SetKind::nondegenerate_one_spaces, form);
}

}  // namespace cosetlab::mat
