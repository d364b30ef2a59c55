#include <doctest.h>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <thread>

#include "cosetlab/ingest/checksum.hpp"
#include "cosetlab/ingest/fetch.hpp"
#include "cosetlab/ingest/formats.hpp"
#include "cosetlab/ingest/slp.hpp"

using namespace cosetlab;
using namespace cosetlab::ingest;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string& tag) {
    auto d = fs::temp_directory_path() / ("cosetlab_test_" + tag + "_" + std::to_string(std::random_device{}()));
    fs::create_directories(d);
    return d;
}

// Serves a fixed set of files and counts requests.
class LocalServer {
public:
    explicit LocalServer(std::map<std::string, std::string> files) : files_(std::move(files)) {
        srv_.Get(R"(/data/(.+))", [this](const httplib::Request& req, httplib::Response& res) {
            ++hits_;
            auto it = files_.find(req.matches[1]);
            if (it == files_.end()) {
                res.status = 404;
                return;
            }
            res.set_content(it->second, "text/plain");
        });
        port_ = srv_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { srv_.listen_after_bind(); });
        srv_.wait_until_ready();
    }
    ~LocalServer() {
        srv_.stop();
        thread_.join();
    }
    std::string base() const { return "http://127.0.0.1:" + std::to_string(port_) + "/data"; }
    int hits() const { return hits_; }
    std::map<std::string, std::string> files_;

private:
    httplib::Server srv_;
    std::thread thread_;
    int port_ = 0;
    std::atomic<int> hits_{0};
};

const char* kCycles = "deg 5\n(1,2,3,4,5)\n(1,2)\n";

}  // namespace

TEST_SUITE("ingest") {

TEST_CASE("images round trip") {
    std::mt19937_64 rng(1);
    std::vector<perm::Permutation> gens;
    for (int i = 0; i < 4; ++i) {
        std::vector<perm::Point> v(9);
        std::iota(v.begin(), v.end(), 0);
        std::shuffle(v.begin(), v.end(), rng);
        gens.emplace_back(v);
    }
    auto text = serialize_images(gens);
    CHECK(parse_images(text) == gens);
    CHECK(detect_format(text) == Format::images);
    CHECK(parse_cycles(serialize_cycles(gens)) == gens);
}

TEST_CASE("cycles format") {
    auto g = parse_cycles(kCycles);
    REQUIRE(g.size() == 2);
    CHECK(g[0].to_cycle_string() == "(1,2,3,4,5)");
    CHECK(parse_cycles("deg 3 / () / (1,3)").size() == 2);
    CHECK(parse_cycles("# comment\ndeg 3\n\n(2,3)\n")[0][1] == 2);
}

TEST_CASE("matrix text round trip") {
    auto text = "mat 3 2 2\n12\n01\n10\n21\n";
    auto m = parse_matrix_text(text);
    REQUIRE(m.size() == 2);
    CHECK(m[0](0, 1) == 2);
    CHECK(parse_matrix_text(serialize_matrix_text(m)) == m);
}

TEST_CASE("format errors carry line numbers") {
    auto line_of = [](auto&& f) -> std::size_t {
        try {
            f();
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of([] { parse_cycles("deg 4\n(1,2)\n(1,5)\n"); }) == 3);
    CHECK(line_of([] { parse_cycles("deg 4\n(1,1)\n"); }) == 2);
    CHECK(line_of([] { parse_images("perm 3 2\n1 2 3\n1 1 2\n"); }) == 3);
    CHECK_THROWS_AS(parse_images("perm 3 2\n1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix_text("mat 2 2 1\n13\n01\n"), ParseError);
    CHECK_THROWS_AS(parse_images(""), ParseError);
}

TEST_CASE("straight-line programs") {
    auto prog = parse_slp("inp a b\nmu a b c\npwr 2 c d\niv a e\ncom a b f\ncj a b g\npwr 0 a h\noup c d e f g h");
    CHECK(prog.inputs == std::vector<std::string>{"a", "b"});
    CHECK(prog.outputs.size() == 6);
    CHECK(parse_slp(serialize_slp(prog)).code.size() == prog.code.size());
    auto g = parse_cycles(kCycles);
    auto out = eval_slp(
        prog, g, [](const auto& x, const auto& y) { return x * y; }, [](const auto& x) { return x.inverse(); },
        [] { return perm::Permutation::identity(5); });
    CHECK(out[0] == g[0] * g[1]);
    CHECK(out[1] == g[0] * g[1] * g[0] * g[1]);
    CHECK(out[2] == g[0].inverse());
    CHECK(out[3] == g[0].inverse() * g[1].inverse() * g[0] * g[1]);
    CHECK(out[4] == g[1].inverse() * g[0] * g[1]);
    CHECK(out[5].is_identity());
    // implicit inputs, ';' separators, negative powers
    auto p2 = parse_slp("mu x y z; pwr -1 z w; oup w");
    CHECK(p2.inputs == std::vector<std::string>{"x", "y"});
    auto o2 = eval_slp(
        p2, g, [](const auto& x, const auto& y) { return x * y; }, [](const auto& x) { return x.inverse(); },
        [] { return perm::Permutation::identity(5); });
    CHECK(o2[0] == (g[0] * g[1]).inverse());
}

TEST_CASE("bad straight-line programs") {
    CHECK_THROWS_AS(parse_slp("inp a\nmu a b c\noup c"), ParseError);
    CHECK_THROWS_AS(parse_slp("inp a\nfoo a b\n"), ParseError);
    CHECK_THROWS_AS(parse_slp("inp a\nmu a a\n"), ParseError);
    CHECK_THROWS_AS(parse_slp("mu a b c\ninp a b\n"), ParseError);
}

TEST_CASE("sha256") {
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("missing data is gated") {
    auto dir = temp_dir("gated");
    CHECK_THROWS_AS(fetch("nothing.txt", "", dir.string()), GatedDataMissing);
    CHECK_THROWS_AS(load_generator_file((dir / "nothing.txt").string()), GatedDataMissing);
    fs::remove_all(dir);
}

TEST_CASE("fetch downloads once, verifies checksums and repairs the cache") {
    LocalServer srv(std::map<std::string, std::string>{{"s5.txt", kCycles}});
    auto dir = temp_dir("fetch");
    auto sum = sha256_hex(kCycles);

    auto f = fetch("s5.txt", srv.base(), dir.string(), sum);
    CHECK(f.payload == kCycles);
    CHECK(f.checksum == sum);
    CHECK(f.format == Format::cycles);
    CHECK(srv.hits() == 1);

    auto again = fetch("s5.txt", srv.base(), dir.string(), sum);
    CHECK(again.payload == f.payload);
    CHECK(srv.hits() == 1);
    // offline once cached
    CHECK(fetch("s5.txt", "", dir.string()).payload == f.payload);

    {
        std::ofstream out(dir / "s5.txt", std::ios::trunc);
        out << "deg 5\n(1,2)\n";
    }
    auto repaired = fetch("s5.txt", srv.base(), dir.string(), sum);
    CHECK(repaired.payload == kCycles);
    CHECK(srv.hits() == 2);

    CHECK_THROWS_AS(fetch("s5.txt", srv.base(), (dir / "other").string(), std::string(64, '0')), ChecksumMismatch);
    CHECK_FALSE(fs::exists(dir / "other" / "s5.txt"));
    CHECK_THROWS_AS(fetch("absent.txt", srv.base(), dir.string()), GatedDataMissing);
    fs::remove_all(dir);
}

TEST_CASE("concurrent fetches of one file") {
    LocalServer srv(std::map<std::string, std::string>{{"s5.txt", kCycles}});
    auto dir = temp_dir("concurrent");
    std::vector<std::thread> ts;
    std::atomic<int> ok{0};
    for (int i = 0; i < 4; ++i)
        ts.emplace_back([&] {
            if (fetch("s5.txt", srv.base(), dir.string()).payload == kCycles) ++ok;
        });
    for (auto& t : ts) t.join();
    CHECK(ok == 4);
    CHECK(srv.hits() == 1);
    fs::remove_all(dir);
}

}
