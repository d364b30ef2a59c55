#include "cosetlab/cli/cache.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cosetlab/error.hpp"
#include "cosetlab/ingest/checksum.hpp"

namespace cosetlab::cli {

namespace fs = std::filesystem;

namespace {

std::string now_utc() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

mat::Matrix matrix_from_string(const std::string& s, int p, int n) {
    std::vector<std::vector<int>> rows;
    std::stringstream ss(s);
    std::string row;
    while (std::getline(ss, row, '/')) {
        std::vector<int> r;
        for (char c : row) r.push_back(c - '0');
        rows.push_back(std::move(r));
    }
    auto m = mat::Matrix::from_rows(p, rows);
    if (m.n() != n) throw Error("cached matrix has the wrong size");
    return m;
}

template <class G, class Enc>
json chain_json(const G& g, Enc enc) {
    json gens = json::array(), strong = json::array();
    for (const auto& x : g.generators()) gens.push_back(enc(x));
    for (const auto& x : g.strong_generators()) strong.push_back(enc(x));
    return json{{"generators", gens},
                {"base", g.base()},
                {"strong", strong},
                {"order", g.order()},
                {"provenance", g.provenance()}};
}

template <class A, class Dec>
perm::Group<A> restore_chain(A action, const json& p, Dec dec) {
    std::vector<typename A::Element> gens, strong;
    for (const auto& x : p.at("generators")) gens.push_back(dec(x));
    for (const auto& x : p.at("strong")) strong.push_back(dec(x));
    perm::BuildOptions o;
    o.base_prefix = p.at("base").get<std::vector<perm::Point>>();
    o.provenance = p.at("provenance").get<std::string>();
    auto g = perm::GroupBuilder<A>::restore(std::move(action), std::move(gens), strong, o);
    // order recomputed from the rebuilt transversals
    if (g.order() != p.at("order").get<std::uint64_t>()) throw VerificationFailure("cached group order does not match");
    if (g.base() != o.base_prefix) throw VerificationFailure("cached base does not match");
    return g;
}

}  // namespace

Cache::Cache(std::string dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

std::string Cache::hex_key(const std::string& logical_key) {
    return ingest::sha256_hex(std::string(kModuleVersion) + "\n" + logical_key);
}

void Cache::store(const std::string& logical_key, const json& payload) {
    json entry{{"key", hex_key(logical_key)},
               {"logical_key", logical_key},
               {"version", kModuleVersion},
               {"created_at", now_utc()},
               {"payload_sha256", ingest::sha256_hex(payload.dump())},
               {"payload", payload}};
    fs::path path = fs::path(dir_) / hex_key(logical_key);
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw Error("cannot write cache entry " + tmp.string());
        out << entry.dump() << '\n';
        if (!out.flush()) throw Error("short write to " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) throw Error("cannot rename cache entry into " + path.string() + ": " + ec.message());
}

void Cache::discard(const std::string& path) {
    std::error_code ec;
    fs::remove(path, ec);
    ++discarded_;
}

std::optional<CacheEntry> Cache::load(const std::string& logical_key) {
    const std::string key = hex_key(logical_key);
    fs::path path = fs::path(dir_) / key;
    if (!fs::exists(path)) return std::nullopt;
    try {
        std::ifstream in(path);
        json entry = json::parse(in);
        if (entry.at("key") != key || entry.at("version") != kModuleVersion ||
            entry.at("payload_sha256") != ingest::sha256_hex(entry.at("payload").dump()))
            throw VerificationFailure("cache entry failed its checksum");
        return CacheEntry{key, entry.at("created_at").get<std::string>(), entry.at("payload")};
    } catch (const std::exception&) {
        discard(path.string());
        return std::nullopt;
    }
}

std::shared_ptr<const mat::MatrixGroup> Cache::load_matrix(const std::string& key, int p, int n) {
    auto e = load(key);
    if (!e) return nullptr;
    try {
        if (e->payload.at("kind") != "matrix" || e->payload.at("p") != p || e->payload.at("n") != n)
            throw VerificationFailure("cache entry is for a different group");
        return std::make_shared<const mat::MatrixGroup>(restore_chain(
            mat::MatrixAction(p, n), e->payload, [&](const json& x) { return matrix_from_string(x.get<std::string>(), p, n); }));
    } catch (const std::exception&) {
        discard((fs::path(dir_) / e->key).string());
        return nullptr;
    }
}

void Cache::store_matrix(const std::string& key, const mat::MatrixGroup& g) {
    json p = chain_json(g, [](const mat::Matrix& m) { return m.to_string(); });
    p["kind"] = "matrix";
    p["p"] = g.action().p;
    p["n"] = g.action().n;
    store(key, p);
}

std::shared_ptr<const perm::PermGroup> Cache::load_perm(const std::string& key, std::size_t degree) {
    auto e = load(key);
    if (!e) return nullptr;
    try {
        if (e->payload.at("kind") != "perm" || e->payload.at("degree") != degree)
            throw VerificationFailure("cache entry is for a different group");
        return std::make_shared<const perm::PermGroup>(
            restore_chain(perm::PermAction(degree), e->payload, [&](const json& x) {
                perm::Permutation g(x.get<std::vector<perm::Point>>());
                if (g.degree() != degree) throw DegreeMismatch("cached permutation has the wrong degree");
                return g;
            }));
    } catch (const std::exception&) {
        discard((fs::path(dir_) / e->key).string());
        return nullptr;
    }
}

void Cache::store_perm(const std::string& key, const perm::PermGroup& g) {
    json p = chain_json(g, [](const perm::Permutation& x) {
        std::vector<perm::Point> v(x.degree());
        for (std::size_t i = 0; i < x.degree(); ++i) v[i] = x[i];
        return v;
    });
    p["kind"] = "perm";
    p["degree"] = g.degree();
    store(key, p);
}

}  // namespace cosetlab::cli
