#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "cosetlab/classlab/element_ops.hpp"
#include "cosetlab/classlab/fingerprint.hpp"
#include "cosetlab/error.hpp"
#include "cosetlab/kernels/bfs.hpp"
#include "cosetlab/perm/group.hpp"

namespace cosetlab::classlab {

using kernels::Exec;
using kernels::kNoIndex;
using perm::GroupAction;
using perm::KeyWord;

struct Caps {
    std::size_t class_cap = 5'000'000;
    std::size_t total_cap = 20'000'000;
    friend bool operator==(const Caps&, const Caps&) = default;
};

template <GroupAction A>
struct ClassOptions {
    std::size_t cap = Caps{}.class_cap;
    std::uint64_t seed = 0;
    Exec exec = Exec::parallel;
    CosetLabel<typename A::Element> coset;
};

// Members of G are rebuilt from keys without a fresh membership test when the
// action allows it.
template <GroupAction A>
typename A::Element decode_member(const perm::Group<A>& g, const KeyWord* key) {
    if constexpr (perm::DecodableAction<A>)
        return g.action().decode_key(key);
    else
        return g.decode_key(key);
}

template <GroupAction A>
std::string key_encoding() {
    return A::key_is_base_image ? "base-images" : "packed-matrix";
}

template <GroupAction A>
Fingerprint fingerprint_in(const typename A::Element& g, const CosetLabel<typename A::Element>& coset) {
    return fingerprint(g, coset ? coset(g) : std::string());
}

// A fully enumerated conjugacy class. Immutable once built.
template <GroupAction A>
class ClassHandle {
public:
    using Element = typename A::Element;
    using G = perm::Group<A>;

    const G& group() const { return *group_; }
    const std::shared_ptr<const G>& group_ptr() const { return group_; }
    const Element& representative() const { return rep_; }
    std::uint64_t size() const { return tree_.keys.size(); }
    const kernels::KeySet& keys() const { return tree_.keys; }
    const Fingerprint& fingerprint() const { return fp_; }
    std::string encoding() const { return key_encoding<A>(); }
    std::size_t depth() const { return tree_.depth; }

    // g must lie in the group.
    std::uint32_t index_of(const Element& g) const {
        std::vector<KeyWord> k(group_->key_width());
        group_->encode_key(g, k.data());
        return tree_.keys.find(k.data());
    }
    bool contains(const Element& g) const { return index_of(g) != kNoIndex; }
    Element element(std::size_t i) const { return decode_member(*group_, tree_.keys.key(i)); }

    // t with t^-1 rep t = element(i).
    Element conjugator(std::size_t i) const {
        const auto& a = group_->action();
        std::vector<std::uint16_t> path;
        for (auto j = static_cast<std::uint32_t>(i); tree_.parent[j] != kNoIndex; j = tree_.parent[j])
            path.push_back(tree_.via[j]);
        Element t = a.identity();
        for (auto it = path.rbegin(); it != path.rend(); ++it) t = a.multiply(t, gens_[*it]);
        return t;
    }

    const std::vector<Element>& centralizer_generators() const { return cent_gens_; }
    const G& centralizer() const { return *centralizer_; }
    std::uint64_t centralizer_order() const { return centralizer_->order(); }
    bool used_fallback() const { return fallback_; }

    template <GroupAction B>
    friend std::shared_ptr<const ClassHandle<B>> enumerate_class(std::shared_ptr<const perm::Group<B>> g,
                                                                 const typename B::Element& rep,
                                                                 const ClassOptions<B>& opt);

private:
    void build_centralizer(std::uint64_t seed);

    std::shared_ptr<const G> group_;
    Element rep_;
    std::vector<Element> gens_, gens_inv_;
    kernels::BfsTree tree_;
    Fingerprint fp_;
    std::vector<Element> cent_gens_;
    std::shared_ptr<const G> centralizer_;
    bool fallback_ = false;
};

// Breadth-first conjugation orbit of rep under the group generators, then the
// centralizer from Schreier generators of that orbit, checked against
// |G| / |class|.
template <GroupAction A>
std::shared_ptr<const ClassHandle<A>> enumerate_class(std::shared_ptr<const perm::Group<A>> g,
                                                      const typename A::Element& rep, const ClassOptions<A>& opt) {
    if (!g->contains(rep)) throw NotInGroup("enumerate_class: representative is not in the group");
    auto h = std::make_shared<ClassHandle<A>>();
    h->group_ = g;
    h->rep_ = rep;
    const auto& a = g->action();
    for (const auto& s : g->generators()) {
        if (a.is_identity(s)) continue;
        h->gens_.push_back(s);
        h->gens_inv_.push_back(a.inverse(s));
    }
    if (h->gens_.size() > 0xffff) throw Unsupported("too many generators for the conjugation tree");
    const std::size_t w = g->key_width();
    std::vector<KeyWord> root(w);
    g->encode_key(rep, root.data());
    const auto* hp = h.get();
    auto expand = [&](const KeyWord* key, KeyWord* out) {
        typename A::Element y = decode_member(*g, key);
        for (std::size_t s = 0; s < hp->gens_.size(); ++s)
            g->encode_key(conjugate(a, y, hp->gens_[s], hp->gens_inv_[s]), out + s * w);
    };
    h->tree_ = kernels::bfs_orbit(root.data(), w, h->gens_.size(), expand, opt.cap, opt.exec);
    h->fp_ = fingerprint_in<A>(rep, opt.coset);
    h->build_centralizer(opt.seed);
    return h;
}

template <GroupAction A>
void ClassHandle<A>::build_centralizer(std::uint64_t seed) {
    const auto& a = group_->action();
    const std::uint64_t order = group_->order();
    if (order % size() != 0)
        throw VerificationFailure("class size " + std::to_string(size()) + " does not divide the group order");
    const std::uint64_t target = order / size();
    if (size() == 1) {
        centralizer_ = group_;
        cent_gens_ = group_->generators();
        return;
    }
    perm::BuildOptions bo;
    bo.known_order = target;
    bo.seed = seed ^ 0x9e3779b97f4a7c15ULL;
    bo.provenance = "centralizer";
    perm::GroupBuilder<A> b(a, bo);

    auto schreier = [&](std::size_t i, std::size_t s) {
        Element yi = element(i);
        Element z = conjugate(a, yi, gens_[s], gens_inv_[s]);
        auto j = index_of(z);
        if (j == kNoIndex) throw VerificationFailure("class is not closed under conjugation");
        return a.multiply(a.multiply(conjugator(i), gens_[s]), a.inverse(conjugator(j)));
    };
    auto add = [&](const Element& x) {
        if (a.is_identity(x) || b.group().contains(x)) return;
        b.add_generator(x);
        cent_gens_.push_back(x);
    };

    std::mt19937_64 rng(seed + 0x5bd1e995u);
    std::uniform_int_distribution<std::size_t> pick_i(0, size() - 1), pick_s(0, gens_.size() - 1);
    for (int round = 0; round < 64; ++round) {
        for (int k = 0; k < 3; ++k) add(schreier(pick_i(rng), pick_s(rng)));
        if (b.run() == perm::GroupBuilder<A>::Status::reached) {
            centralizer_ = std::make_shared<const G>(b.finish());
            return;
        }
    }
    // Full Schreier generator harvest.
    fallback_ = true;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t s = 0; s < gens_.size(); ++s) {
            add(schreier(i, s));
            if (b.group().order() == target) {
                centralizer_ = std::make_shared<const G>(b.finish());
                return;
            }
        }
    b.verify();
    if (b.group().order() != target)
        throw VerificationFailure("centralizer order " + std::to_string(b.group().order()) + " differs from " +
                                  std::to_string(target));
    centralizer_ = std::make_shared<const G>(b.finish());
}

}  // namespace cosetlab::classlab
