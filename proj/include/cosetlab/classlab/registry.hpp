#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cosetlab/classlab/class_handle.hpp"
#include "cosetlab/perm/enumerate.hpp"

namespace cosetlab::classlab {

// Classes met so far, bucketed by fingerprint. Identification is by exact key
// membership; an element outside every registered class of its bucket starts a
// new enumeration.
template <GroupAction A>
class ClassRegistry {
public:
    using Element = typename A::Element;
    using G = perm::Group<A>;
    using Handle = std::shared_ptr<const ClassHandle<A>>;

    ClassRegistry(std::shared_ptr<const G> g, Caps caps = {}, std::uint64_t seed = 0, Exec exec = Exec::parallel,
                  CosetLabel<Element> coset = {})
        : group_(std::move(g)), caps_(caps), seed_(seed), exec_(exec), coset_(std::move(coset)) {}

    const G& group() const { return *group_; }
    const std::shared_ptr<const G>& group_ptr() const { return group_; }
    const Caps& caps() const { return caps_; }
    Exec exec() const { return exec_; }
    const CosetLabel<Element>& coset() const { return coset_; }

    Fingerprint fingerprint_of(const Element& g) const { return fingerprint_in<A>(g, coset_); }

    std::size_t count() const { return classes_.size(); }
    const ClassHandle<A>& at(std::size_t i) const { return *classes_[i]; }
    const Handle& handle(std::size_t i) const { return classes_[i]; }
    std::size_t total_elements() const { return total_; }

    std::size_t find(const Element& g, const Fingerprint& fp) const {
        auto it = buckets_.find(fp.str());
        if (it == buckets_.end()) return kNoIndex;
        for (std::size_t c : it->second)
            if (classes_[c]->contains(g)) return c;
        return kNoIndex;
    }
    std::size_t find(const Element& g) const { return find(g, fingerprint_of(g)); }

    // Membership scan over every class, skipping the fingerprint.
    std::size_t find_any(const Element& g) const {
        for (std::size_t c = 0; c < classes_.size(); ++c)
            if (classes_[c]->contains(g)) return c;
        return kNoIndex;
    }

    std::size_t classify(const Element& g, const Fingerprint& fp) {
        std::size_t c = find(g, fp);
        if (c != kNoIndex) return c;
        ClassOptions<A> o;
        o.cap = std::min(caps_.class_cap, caps_.total_cap - std::min(caps_.total_cap, total_));
        o.seed = seed_ + classes_.size();
        o.exec = exec_;
        o.coset = coset_;
        if (o.cap == 0) throw CapExceeded("decomposition total cap " + std::to_string(caps_.total_cap), total_);
        return add(enumerate_class(group_, g, o));
    }
    std::size_t classify(const Element& g) { return classify(g, fingerprint_of(g)); }

    // Registers an already enumerated class; returns its index.
    std::size_t add(Handle h) {
        std::size_t c = find(h->representative(), h->fingerprint());
        if (c != kNoIndex) return c;
        total_ += h->size();
        if (total_ > caps_.total_cap) throw CapExceeded("decomposition total cap " + std::to_string(caps_.total_cap), total_);
        buckets_[h->fingerprint().str()].push_back(classes_.size());
        classes_.push_back(std::move(h));
        return classes_.size() - 1;
    }

    Handle enumerate(const Element& rep) { return classes_[classify(rep)]; }

private:
    std::shared_ptr<const G> group_;
    Caps caps_;
    std::uint64_t seed_;
    Exec exec_;
    CosetLabel<Element> coset_;
    std::vector<Handle> classes_;
    std::map<std::string, std::vector<std::size_t>> buckets_;
    std::size_t total_ = 0;
};

// Report order: class size, element order, fingerprint text.
template <GroupAction A>
bool class_less(const ClassHandle<A>& a, const ClassHandle<A>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    if (a.fingerprint().order != b.fingerprint().order) return a.fingerprint().order < b.fingerprint().order;
    return a.fingerprint().str() < b.fingerprint().str();
}

// Every class of G, by walking all elements. Small groups only.
template <GroupAction A>
std::vector<std::shared_ptr<const ClassHandle<A>>> all_classes(ClassRegistry<A>& reg) {
    perm::for_each_element(reg.group(), [&](const typename A::Element& g) {
        if (reg.find_any(g) == kNoIndex) reg.classify(g);
    });
    std::vector<std::shared_ptr<const ClassHandle<A>>> out;
    for (std::size_t i = 0; i < reg.count(); ++i) out.push_back(reg.handle(i));
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return class_less(*x, *y); });
    return out;
}

}  // namespace cosetlab::classlab
