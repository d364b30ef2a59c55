#include "cosetlab/ingest/fetch.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "cosetlab/error.hpp"
#include "cosetlab/ingest/checksum.hpp"

namespace cosetlab::ingest {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_atomic(const fs::path& p, const std::string& data) {
    fs::path tmp = p;
    tmp += ".tmp." + std::to_string(std::hash<std::string>{}(data) & 0xffffff);
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp.string());
        out << data;
        if (!out.flush()) throw Error("short write to " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, p, ec);
    if (ec) {
        fs::remove(tmp);
        throw Error("cannot rename into " + p.string() + ": " + ec.message());
    }
}

std::mutex& key_mutex(const std::string& key) {
    static std::mutex guard;
    static std::map<std::string, std::mutex> locks;
    std::lock_guard<std::mutex> lk(guard);
    return locks[key];
}

GeneratorFile make_file(const std::string& name, std::string payload, const fs::path& path) {
    GeneratorFile f;
    f.name = name;
    f.format = detect_format(payload);
    f.checksum = sha256_hex(payload);
    f.payload = std::move(payload);
    f.path = path.string();
    return f;
}

std::string download(const std::string& base_url, const std::string& name) {
    // split "scheme://host[:port]/prefix"
    auto scheme_end = base_url.find("://");
    if (scheme_end == std::string::npos) throw GatedDataMissing("base URL '" + base_url + "' has no scheme");
    auto path_start = base_url.find('/', scheme_end + 3);
    std::string host = base_url.substr(0, path_start);
    std::string prefix = path_start == std::string::npos ? "" : base_url.substr(path_start);
    if (prefix.empty() || prefix.back() != '/') prefix += '/';
    httplib::Client cli(host);
    cli.set_connection_timeout(10);
    cli.set_read_timeout(60);
    cli.set_follow_location(true);
    auto res = cli.Get(prefix + name);
    if (!res) throw GatedDataMissing(name + ": download failed (" + httplib::to_string(res.error()) + ")");
    if (res->status != 200)
        throw GatedDataMissing(name + ": download failed with HTTP " + std::to_string(res->status));
    return res->body;
}

}  // namespace

GeneratorFile load_generator_file(const std::string& path) {
    if (!fs::exists(path)) throw GatedDataMissing("missing data file " + path);
    return make_file(fs::path(path).filename().string(), read_file(path), path);
}

std::string default_base_url() {
    const char* v = std::getenv("COSETLAB_BASE_URL");
    return v ? v : "";
}

GeneratorFile fetch(const std::string& name, const std::string& base_url, const std::string& cache_dir,
                    const std::optional<std::string>& expected_sha256) {
    if (name.empty() || name.find('/') != std::string::npos || name.front() == '.')
        throw Error("invalid data file name '" + name + "'");
    const fs::path file = fs::path(cache_dir) / name;
    fs::path sidecar = file;
    sidecar += ".sha256";
    std::lock_guard<std::mutex> lk(key_mutex(file.string()));

    if (fs::exists(file)) {
        std::string payload = read_file(file);
        std::string sum = sha256_hex(payload);
        bool ok = !expected_sha256 || *expected_sha256 == sum;
        if (ok && fs::exists(sidecar)) {
            std::string recorded = read_file(sidecar);
            while (!recorded.empty() && std::isspace(static_cast<unsigned char>(recorded.back()))) recorded.pop_back();
            ok = recorded == sum;
        }
        if (ok) return make_file(name, std::move(payload), file);
    }
    if (base_url.empty()) throw GatedDataMissing("data file " + name + " is not in " + cache_dir + " and no base URL is set");
    std::string payload = download(base_url, name);
    std::string sum = sha256_hex(payload);
    if (expected_sha256 && *expected_sha256 != sum)
        throw ChecksumMismatch(name + ": expected sha256 " + *expected_sha256 + ", got " + sum);
    fs::create_directories(cache_dir);
    write_atomic(file, payload);
    write_atomic(sidecar, sum + "\n");
    return make_file(name, std::move(payload), file);
}

}  // namespace cosetlab::ingest
