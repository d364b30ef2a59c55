#pragma once

#include <cstdint>
#include <cstring>
#include <memory>
#include <string_view>
#include <utility>
#include <vector>

#include <absl/container/flat_hash_set.h>
#include <absl/hash/hash.h>

#include "cosetlab/perm/action.hpp"

namespace cosetlab::kernels {

using perm::KeyWord;
inline constexpr std::uint32_t kNoIndex = 0xffffffffu;

// Insertion-ordered set of fixed-width keys. Keys live in one flat arena and
// the hash index stores arena positions only.
class KeySet {
public:
    explicit KeySet(std::size_t width = 0)
        : arena_(std::make_unique<Arena>()), index_(16, Hash{arena_.get()}, Eq{arena_.get()}) {
        arena_->width = width;
    }

    std::size_t width() const { return arena_->width; }
    std::size_t size() const { return arena_->count; }
    const KeyWord* key(std::size_t i) const { return arena_->words.data() + i * arena_->width; }
    std::vector<KeyWord> key_copy(std::size_t i) const { return {key(i), key(i) + width()}; }

    // (index, inserted)
    std::pair<std::uint32_t, bool> insert(const KeyWord* k) {
        auto it = index_.find(View{k});
        if (it != index_.end()) return {*it, false};
        auto idx = static_cast<std::uint32_t>(arena_->count);
        arena_->words.insert(arena_->words.end(), k, k + width());
        ++arena_->count;
        index_.insert(idx);
        return {idx, true};
    }

    std::uint32_t find(const KeyWord* k) const {
        auto it = index_.find(View{k});
        return it == index_.end() ? kNoIndex : *it;
    }
    bool contains(const KeyWord* k) const { return find(k) != kNoIndex; }

    void reserve(std::size_t n) {
        arena_->words.reserve(n * width());
        index_.reserve(n);
    }

    std::size_t memory_bytes() const {
        return arena_->words.capacity() * sizeof(KeyWord) + index_.capacity() * (sizeof(std::uint32_t) + 1);
    }

private:
    struct Arena {
        std::size_t width = 0;
        std::size_t count = 0;
        std::vector<KeyWord> words;
    };
    struct View {
        const KeyWord* p;
    };
    static std::string_view bytes(const KeyWord* p, std::size_t w) {
        return {reinterpret_cast<const char*>(p), w * sizeof(KeyWord)};
    }
    struct Hash {
        using is_transparent = void;
        const Arena* a;
        std::size_t operator()(std::uint32_t i) const {
            return absl::Hash<std::string_view>{}(bytes(a->words.data() + i * a->width, a->width));
        }
        std::size_t operator()(View v) const { return absl::Hash<std::string_view>{}(bytes(v.p, a->width)); }
    };
    struct Eq {
        using is_transparent = void;
        const Arena* a;
        const KeyWord* at(std::uint32_t i) const { return a->words.data() + i * a->width; }
        const KeyWord* at(View v) const { return v.p; }
        template <class L, class R>
        bool operator()(const L& l, const R& r) const {
            return std::memcmp(at(l), at(r), a->width * sizeof(KeyWord)) == 0;
        }
    };

    std::unique_ptr<Arena> arena_;
    absl::flat_hash_set<std::uint32_t, Hash, Eq> index_;
};

}  // namespace cosetlab::kernels
