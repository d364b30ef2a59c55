#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cosetlab/error.hpp"
#include "cosetlab/perm/action.hpp"
#include "cosetlab/perm/product_replacement.hpp"

namespace cosetlab::perm {

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Unsupported("group order exceeds 64 bits");
    return r;
}

struct BuildOptions {
    std::optional<std::uint64_t> known_order;
    std::uint64_t seed = 0;
    std::size_t memory_cap = std::size_t{4} << 30;
    // Consecutive trivial sifts after which the random phase stops.
    std::size_t stall_limit = 48;
    std::vector<Point> base_prefix;
    std::string provenance;
};

template <GroupAction A>
struct Orbit {
    std::vector<Point> points;                  // discovery order, seed first
    std::vector<typename A::Element> transversal;  // transversal[i] maps the seed to points[i]
};

template <GroupAction A>
class GroupBuilder;

// Stabilizer chain with explicit transversals. Immutable once built.
template <GroupAction A>
class Group {
public:
    using Element = typename A::Element;

    struct Level {
        Point base_point = 0;
        std::vector<std::size_t> gens;  // indices into strong generators
        std::vector<Point> orbit;
        std::vector<std::int32_t> slot;  // point -> position in orbit, -1 if absent
        std::vector<Element> transversal;  // maps base_point to orbit[k]
        std::vector<Element> inverse_transversal;

        bool in_orbit(Point p) const { return slot[p] >= 0; }
    };

    struct SiftResult {
        Element residue;
        std::size_t level;  // first level where sifting stopped; num_levels() if it ran through
        bool is_member = false;
        bool member() const { return is_member; }
    };

    static Group build(A action, std::vector<Element> gens, const BuildOptions& opts = {});

    const A& action() const { return action_; }
    std::size_t degree() const { return action_.degree(); }
    const std::vector<Element>& generators() const { return gens_; }
    const std::vector<Element>& strong_generators() const { return strong_; }
    const std::vector<Point>& base() const { return base_; }
    std::size_t num_levels() const { return levels_.size(); }
    const Level& level(std::size_t i) const { return levels_[i]; }
    const std::string& provenance() const { return provenance_; }
    Element identity() const { return action_.identity(); }

    std::uint64_t order() const {
        std::uint64_t o = 1;
        for (const auto& l : levels_) o = checked_mul(o, l.orbit.size());
        return o;
    }

    std::vector<std::size_t> basic_orbit_lengths() const {
        std::vector<std::size_t> r;
        for (const auto& l : levels_) r.push_back(l.orbit.size());
        return r;
    }

    SiftResult sift(const Element& g, std::size_t from = 0) const {
        Element h = g;
        for (std::size_t i = from; i < levels_.size(); ++i) {
            const Level& l = levels_[i];
            Point b = action_.image(h, l.base_point);
            if (l.slot[b] < 0) return SiftResult{std::move(h), i, false};
            h = action_.multiply(h, l.inverse_transversal[static_cast<std::size_t>(l.slot[b])]);
        }
        bool id = action_.is_identity(h);
        return SiftResult{std::move(h), levels_.size(), id};
    }

    bool contains(const Element& g) const { return sift(g).member(); }

    Orbit<A> orbit(Point seed) const {
        if (seed >= degree()) throw Error("orbit: point out of range");
        Orbit<A> o;
        std::vector<std::int32_t> slot(degree(), -1);
        o.points.push_back(seed);
        o.transversal.push_back(action_.identity());
        slot[seed] = 0;
        for (std::size_t k = 0; k < o.points.size(); ++k) {
            for (const auto& s : gens_) {
                Point q = action_.image(s, o.points[k]);
                if (slot[q] >= 0) continue;
                slot[q] = static_cast<std::int32_t>(o.points.size());
                o.points.push_back(q);
                o.transversal.push_back(action_.multiply(o.transversal[k], s));
            }
        }
        return o;
    }

    std::vector<Point> orbit_points(Point seed) const {
        std::vector<Point> pts{seed};
        std::vector<char> seen(degree(), 0);
        seen[seed] = 1;
        for (std::size_t k = 0; k < pts.size(); ++k)
            for (const auto& s : gens_) {
                Point q = action_.image(s, pts[k]);
                if (!seen[q]) {
                    seen[q] = 1;
                    pts.push_back(q);
                }
            }
        return pts;
    }

    // Key words for g without a membership test.
    std::size_t key_width() const { return action_.key_width(base_.size()); }
    void encode_key(const Element& g, KeyWord* out) const { action_.encode_key(g, base_, out); }

    ElementKey canonical_key(const Element& g) const {
        if (!contains(g)) throw NotInGroup("canonical_key: element is not in the group");
        ElementKey k(key_width());
        encode_key(g, k.data());
        return k;
    }

    // Rebuilds an element from its key words; throws if the key is not realizable.
    Element decode_key(const KeyWord* in) const {
        if constexpr (A::key_is_base_image) {
            std::vector<Point> img(in, in + base_.size());
            std::vector<const Element*> factors;
            for (std::size_t i = 0; i < levels_.size(); ++i) {
                const Level& l = levels_[i];
                Point b = img[i];
                if (b >= degree() || l.slot[b] < 0)
                    throw NotInGroup("element_from_key: key is not realizable");
                auto k = static_cast<std::size_t>(l.slot[b]);
                const Element& uinv = l.inverse_transversal[k];
                for (std::size_t j = i + 1; j < img.size(); ++j) img[j] = action_.image(uinv, img[j]);
                factors.push_back(&l.transversal[k]);
            }
            Element g = action_.identity();
            for (auto it = factors.rbegin(); it != factors.rend(); ++it) g = action_.multiply(g, **it);
            return g;
        } else {
            Element g = action_.decode_key(in);
            if (!contains(g)) throw NotInGroup("element_from_key: key is not realizable");
            return g;
        }
    }

    Element element_from_key(const ElementKey& k) const {
        if (k.size() != key_width()) throw NotInGroup("element_from_key: wrong key width");
        return decode_key(k.data());
    }

    // Uniform sample from the transversal product; deterministic in seed.
    Element random_element(std::uint64_t seed) const {
        std::mt19937_64 rng(seed * 0x2545F4914F6CDD1DULL + 0x1234567ULL);
        Element g = action_.identity();
        for (std::size_t i = levels_.size(); i-- > 0;) {
            const Level& l = levels_[i];
            std::uniform_int_distribution<std::size_t> pick(0, l.orbit.size() - 1);
            g = action_.multiply(g, l.transversal[pick(rng)]);
        }
        return g;
    }

    std::size_t stored_elements() const {
        std::size_t n = 0;
        for (const auto& l : levels_) n += 2 * l.transversal.size();
        return n;
    }

private:
    friend class GroupBuilder<A>;

    A action_;
    std::vector<Element> gens_;
    std::vector<Element> strong_;
    std::vector<Point> base_;
    std::vector<Level> levels_;
    std::string provenance_;
};

// Randomized Schreier-Sims, resumable so callers can add generators until a
// target order is met.
template <GroupAction A>
class GroupBuilder {
public:
    using Element = typename A::Element;
    using G = Group<A>;

    enum class Status { reached, stalled, verified };

    GroupBuilder(A action, const BuildOptions& opts) : opts_(opts), pr_seed_(opts.seed) {
        g_.action_ = std::move(action);
        g_.provenance_ = opts.provenance;
        for (Point b : opts.base_prefix) {
            if (b >= g_.degree()) throw Error("base prefix point out of range");
            if (std::find(g_.base_.begin(), g_.base_.end(), b) == g_.base_.end()) add_level(b);
        }
    }

    const G& group() const { return g_; }

    // Replays a stored chain: base and strong generators in their original
    // order give back identical orbits and transversals. Pass the stored base
    // as opts.base_prefix.
    static G restore(A action, std::vector<Element> gens, const std::vector<Element>& strong, const BuildOptions& opts) {
        GroupBuilder b(std::move(action), opts);
        const auto& a = b.g_.action_;
        for (const auto& h : strong) {
            std::size_t lvl = 0;
            while (lvl < b.g_.levels_.size() && a.image(h, b.g_.levels_[lvl].base_point) == b.g_.levels_[lvl].base_point)
                ++lvl;
            b.add_strong(h, lvl);
        }
        b.g_.gens_ = std::move(gens);
        return b.finish();
    }

    void add_generator(const Element& s) {
        g_.gens_.push_back(s);
        pr_.reset();
        if (g_.action_.is_identity(s)) return;
        auto r = g_.sift(s);
        if (!r.member()) add_strong(r.residue, r.level);
    }

    // Random phase. Stops when the known order is reached or after a run of
    // trivial sifts.
    Status run() {
        const auto& a = g_.action_;
        if (g_.gens_.empty()) return opts_.known_order.value_or(1) == 1 ? Status::reached : Status::stalled;
        if (!pr_) pr_.emplace(a, g_.gens_, pr_seed_++);
        std::size_t trivial = 0;
        while (true) {
            std::uint64_t o = g_.order();
            if (opts_.known_order) {
                if (o == *opts_.known_order) return Status::reached;
                if (o > *opts_.known_order)
                    throw OrderMismatch("constructed order " + std::to_string(o) +
                                        " is incompatible with expected " +
                                        std::to_string(*opts_.known_order));
            }
            if (trivial >= opts_.stall_limit) return Status::stalled;
            Element x = pr_->next();
            auto r = g_.sift(x);
            if (r.member()) {
                ++trivial;
            } else {
                add_strong(r.residue, r.level);
                trivial = 0;
            }
        }
    }

    // Deterministic Schreier-generator test. Adds strong generators until
    // every Schreier generator sifts.
    void verify() {
        const auto& a = g_.action_;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = g_.levels_.size(); i-- > 0 && !changed;) {
                auto& l = g_.levels_[i];
                for (std::size_t k = 0; !changed && k < l.orbit.size(); ++k) {
                    for (std::size_t gi = 0; !changed && gi < l.gens.size(); ++gi) {
                        const Element& s = g_.strong_[l.gens[gi]];
                        Point gamma = a.image(s, l.orbit[k]);
                        auto j = static_cast<std::size_t>(l.slot[gamma]);
                        Element h = a.multiply(a.multiply(l.transversal[k], s), l.inverse_transversal[j]);
                        auto r = g_.sift(h, i + 1);
                        if (!r.member()) {
                            add_strong(r.residue, r.level);
                            changed = true;
                        }
                    }
                }
            }
        }
    }

    G finish() {
        for (const auto& s : g_.gens_)
            if (!g_.contains(s))
                throw VerificationFailure("generator failed the membership test after construction");
        if (opts_.known_order && g_.order() != *opts_.known_order)
            throw OrderMismatch("constructed order " + std::to_string(g_.order()) + " differs from expected " +
                                std::to_string(*opts_.known_order));
        return std::move(g_);
    }

private:
    void add_level(Point b) {
        typename G::Level l;
        l.base_point = b;
        l.slot.assign(g_.degree(), -1);
        l.orbit.push_back(b);
        l.slot[b] = 0;
        l.transversal.push_back(g_.action_.identity());
        l.inverse_transversal.push_back(g_.action_.identity());
        g_.base_.push_back(b);
        g_.levels_.push_back(std::move(l));
        account(2);
    }

    // h fixes base points 0..lvl-1 and is not in the stabilizer chain at lvl.
    void add_strong(const Element& h, std::size_t lvl) {
        const auto& a = g_.action_;
        if (lvl == g_.levels_.size()) {
            Point moved = static_cast<Point>(g_.degree());
            for (Point x = 0; x < g_.degree(); ++x)
                if (a.image(h, x) != x) {
                    moved = x;
                    break;
                }
            if (moved == g_.degree()) return;
            add_level(moved);
        }
        std::size_t idx = g_.strong_.size();
        g_.strong_.push_back(h);
        Element hinv = a.inverse(h);
        strong_inv_.push_back(hinv);
        for (std::size_t i = 0; i <= lvl; ++i) {
            g_.levels_[i].gens.push_back(idx);
            extend_orbit(i, idx);
        }
    }

    void extend_orbit(std::size_t i, std::size_t new_gen) {
        const auto& a = g_.action_;
        auto& l = g_.levels_[i];
        std::size_t old = l.orbit.size();
        auto visit = [&](std::size_t k, std::size_t gidx) {
            Point q = a.image(g_.strong_[gidx], l.orbit[k]);
            if (l.slot[q] >= 0) return;
            l.slot[q] = static_cast<std::int32_t>(l.orbit.size());
            l.orbit.push_back(q);
            l.transversal.push_back(a.multiply(l.transversal[k], g_.strong_[gidx]));
            l.inverse_transversal.push_back(a.multiply(strong_inv_[gidx], l.inverse_transversal[k]));
            account(2);
        };
        for (std::size_t k = 0; k < old; ++k) visit(k, new_gen);
        for (std::size_t k = old; k < l.orbit.size(); ++k)
            for (std::size_t gidx : l.gens) visit(k, gidx);
    }

    void account(std::size_t elements) {
        stored_ += elements;
        std::size_t bytes = stored_ * g_.action_.element_bytes();
        if (bytes > opts_.memory_cap)
            throw MemoryCapExceeded("transversal storage " + std::to_string(bytes) + " bytes exceeds cap " +
                                    std::to_string(opts_.memory_cap));
    }

    G g_;
    BuildOptions opts_;
    std::vector<Element> strong_inv_;
    std::optional<ProductReplacement<A>> pr_;
    std::uint64_t pr_seed_;
    std::size_t stored_ = 0;
};

template <GroupAction A>
Group<A> Group<A>::build(A action, std::vector<Element> gens, const BuildOptions& opts) {
    GroupBuilder<A> b(std::move(action), opts);
    for (const auto& s : gens) b.add_generator(s);
    auto st = b.run();
    if (opts.known_order) {
        if (st != GroupBuilder<A>::Status::reached)
            throw OrderMismatch("construction stalled at order " + std::to_string(b.group().order()) +
                                ", expected " + std::to_string(*opts.known_order));
    } else {
        b.verify();
    }
    return b.finish();
}

using PermGroup = Group<PermAction>;

inline PermGroup build_bsgs(const std::vector<Permutation>& gens, std::optional<std::uint64_t> known_order,
                            std::uint64_t seed, std::size_t memory_cap = std::size_t{4} << 30) {
    if (gens.empty()) throw Error("build_bsgs: empty generator list");
    std::size_t n = gens.front().degree();
    for (const auto& g : gens)
        if (g.degree() != n) throw DegreeMismatch("build_bsgs: generators of different degrees");
    BuildOptions o;
    o.known_order = known_order;
    o.seed = seed;
    o.memory_cap = memory_cap;
    o.provenance = "permutation generators";
    return PermGroup::build(PermAction(n), gens, o);
}

}  // namespace cosetlab::perm
