#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "cosetlab/scenarios/groups.hpp"

namespace cosetlab::cli {

using nlohmann::json;

inline constexpr const char* kModuleVersion = "cosetlab-1";

struct CacheEntry {
    std::string key;  // hex sha256 of the logical key and module version
    std::string created_at;
    json payload;
    friend bool operator==(const CacheEntry& a, const CacheEntry& b) { return a.key == b.key && a.payload == b.payload; }
};

// One file per entry under dir, named by the hex key. Writes go through a
// temp file and rename. Entries whose payload hash does not match are
// deleted on load.
class Cache : public scenarios::GroupCache {
public:
    explicit Cache(std::string dir);

    const std::string& dir() const { return dir_; }
    static std::string hex_key(const std::string& logical_key);

    void store(const std::string& logical_key, const json& payload);
    std::optional<CacheEntry> load(const std::string& logical_key);

    std::shared_ptr<const mat::MatrixGroup> load_matrix(const std::string& key, int p, int n) override;
    void store_matrix(const std::string& key, const mat::MatrixGroup& g) override;
    std::shared_ptr<const perm::PermGroup> load_perm(const std::string& key, std::size_t degree) override;
    void store_perm(const std::string& key, const perm::PermGroup& g) override;

    // Entries dropped because they failed verification.
    std::size_t discarded() const { return discarded_; }

private:
    void discard(const std::string& path);
    std::string dir_;
    std::size_t discarded_ = 0;
};

}  // namespace cosetlab::cli
