#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cosetlab/cli/cache.hpp"
#include "cosetlab/cli/dispatch.hpp"
#include "cosetlab/cli/emit.hpp"
#include "cosetlab/scenarios/runner.hpp"

using namespace cosetlab;
using namespace cosetlab::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path temp_dir(const std::string& tag) {
    auto d = fs::temp_directory_path() / ("cosetlab_cli_" + tag + "_" + std::to_string(std::random_device{}()));
    fs::create_directories(d);
    return d;
}

const char* kWrong = R"(id = "wrong_orders"
[group]
name = "SL"
n = 3
q = 2
[elements.tv]
kind = "transvection"
[[checks]]
kind = "product_orders_subset"
c = "tv"
d = "tv"
expected = [1, 2]
)";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"classes"}).code == kExitUsage);
    CHECK(run({"classes", "--group", "Nope:1:1"}).code == kExitUsage);
    CHECK(run({"scenario", "run", "--seed", "abc", "ex3_3_go8"}).code == kExitUsage);
    CHECK(run({"--format", "xml", "scenario", "list"}).code == kExitUsage);
    CHECK(run({"product", "--group", "SL:3:2", "--c", "transvection:rank", "--d", "transvection"}).code == kExitUsage);
}

TEST_CASE("element specs") {
    auto e = parse_element_spec("alt_involution:rank=4", "x");
    CHECK(e.kind == "alt_involution");
    CHECK(e.name == "x");
    CHECK(e.params.get_int("rank") == 4);
    auto f = parse_element_spec("polarity:form=symplectic,shape=1;2", "y");
    CHECK(f.params.get_string("form") == "symplectic");
    CHECK(f.params.get_list("shape") == std::vector<long long>{1, 2});
    CHECK(parse_element_spec("transvection", "z").params.values().empty());
    CHECK_THROWS(parse_element_spec("", "z"));
    CHECK_THROWS(parse_element_spec("tv:rank", "z"));
}

TEST_CASE("scenario run exit codes") {
    CHECK(run({"scenario", "run", "s8_transvection_polarity_orbits"}).code == kExitPass);
    auto dir = temp_dir("wrong");
    std::ofstream(dir / "wrong.toml") << kWrong;
    auto r = run({"scenario", "run", "--file", (dir / "wrong.toml").string()});
    CHECK(r.code == kExitFail);
    CHECK(r.out.find("FAIL") != std::string::npos);
    CHECK(r.out.find("witness") != std::string::npos);
    // gated data: skipped, or exit 3 when strict
    auto nodata = (dir / "nodata").string();
    auto g = run({"--data-dir", nodata, "--base-url", "", "scenario", "run", "prop6_2_g2_in_d4"});
    CHECK(g.code == kExitPass);
    CHECK(g.out.find("SKIPPED(GatedDataMissing)") != std::string::npos);
    CHECK(run({"--strict", "--data-dir", nodata, "--base-url", "", "scenario", "run", "prop6_2_g2_in_d4"}).code ==
          kExitSkipped);
    CHECK(run({"scenario", "run", "no_such_scenario"}).code == kExitUsage);
    fs::remove_all(dir);
}

TEST_CASE("an empty run still prints the summary") {
    auto text = emit_report({}, Format::text);
    CHECK(text.find("0 scenarios: 0 passed, 0 failed, 0 skipped") != std::string::npos);
    CHECK(exit_code({}, true) == kExitPass);
    CHECK(scenarios::parse_reports(emit_report({}, Format::structured)).empty());
}

TEST_CASE("structured output parses back") {
    auto r = run({"--format", "json", "--seed", "5", "scenario", "run", "s8_transvection_polarity_orbits",
                  "commutator_non_p_sl3_2"});
    CHECK(r.code == kExitPass);
    auto reps = scenarios::parse_reports(r.out);
    REQUIRE(reps.size() == 2);
    CHECK(reps[0].id == "s8_transvection_polarity_orbits");
    CHECK(reps[0].seed == 5);
    CHECK(reps[1].passed());
}

TEST_CASE("listing and showing scenarios") {
    auto l = run({"scenario", "list"});
    CHECK(l.code == kExitPass);
    for (const char* id : {"ex3_3_go8", "prop6_1_go6_q2", "prop6_2_g2_in_d4"}) CHECK(l.out.find(id) != std::string::npos);
    auto s = run({"scenario", "show", "ex3_3_go8"});
    CHECK(scenarios::parse_scenario(s.out) == scenarios::load_scenario("ex3_3_go8"));
}

TEST_CASE("ad hoc commands") {
    auto o = run({"orbits", "--group", "S8ext", "--x", "transvection", "--d-class", "transposition"});
    CHECK(o.code == kExitPass);
    CHECK(o.out.find("2 orbits, lengths {4, 24}") != std::string::npos);
    auto c = run({"classes", "--group", "SL:3:2"});
    CHECK(c.code == kExitPass);
    CHECK(c.out.find("6 classes") != std::string::npos);
    auto p = run({"product", "--group", "SL:3:2", "--c", "transvection", "--d", "transvection"});
    CHECK(p.code == kExitPass);
    auto k = run({"--format", "json", "commutator", "--group", "SL:2:3", "--c", "@all", "--d", "@all"});
    CHECK(k.code == kExitPass);
    CHECK_NOTHROW((void)nlohmann::json::parse(k.out));
    CHECK(run({"construct", "--oracle", "--group", "Sp:4:2"}).code == kExitPass);
}

TEST_CASE("cache entries round trip and tampering is repaired") {
    auto dir = temp_dir("cache");
    Cache cache(dir.string());
    nlohmann::json payload{{"a", 1}, {"b", {1, 2, 3}}};
    cache.store("k", payload);
    auto e = cache.load("k");
    REQUIRE(e.has_value());
    CHECK(e->payload == payload);
    CHECK(e->key == Cache::hex_key("k"));
    CHECK_FALSE(cache.load("other").has_value());
    {
        std::ofstream out(dir / Cache::hex_key("k"), std::ios::trunc);
        out << "{\"key\": \"x\", \"payload\": 5}";
    }
    CHECK_FALSE(cache.load("k").has_value());
    CHECK(cache.discarded() == 1);
    CHECK_FALSE(fs::exists(dir / Cache::hex_key("k")));
    fs::remove_all(dir);
}

TEST_CASE("cold and warm cache runs give identical reports") {
    auto dir = temp_dir("warm");
    auto spec = scenarios::load_scenario("sp4_2_vector_orbit_bound");
    scenarios::RunOptions o;
    auto plain = scenarios::run_scenario(spec, o);
    Cache cold(dir.string());
    o.cache = &cold;
    auto a = scenarios::run_scenario(spec, o);
    CHECK_FALSE(fs::is_empty(dir));
    Cache warm(dir.string());
    o.cache = &warm;
    auto b = scenarios::run_scenario(spec, o);
    CHECK(warm.discarded() == 0);
    CHECK(a.passed());
    auto strip = [](const scenarios::Report& r) { return scenarios::serialize_reports({r}, false); };
    CHECK(strip(a) == strip(b));
    CHECK(strip(plain) == strip(a));

    // a corrupted chain is dropped and rebuilt
    for (const auto& f : fs::directory_iterator(dir)) {
        std::ofstream out(f.path(), std::ios::trunc);
        out << "garbage";
    }
    Cache broken(dir.string());
    o.cache = &broken;
    auto c = scenarios::run_scenario(spec, o);
    CHECK(broken.discarded() >= 1);
    CHECK(strip(c) == strip(a));
    fs::remove_all(dir);
}

TEST_CASE("oracle command") {
    auto r = run({"oracle", "--group", "SL:3:2", "--group", "S5"});
    CHECK(r.code == kExitUsage);
    r = run({"oracle", "--group", "SL:3:2"});
    CHECK(r.code == kExitPass);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

}
