#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "cosetlab/scenarios/catalog.hpp"
#include "cosetlab/scenarios/config.hpp"
#include "cosetlab/scenarios/oracle.hpp"
#include "cosetlab/scenarios/runner.hpp"

using namespace cosetlab;
using namespace cosetlab::scenarios;
namespace fs = std::filesystem;

namespace {

std::size_t error_line(const std::string& text) {
    try {
        parse_scenario(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

std::string error_text(const std::string& text) {
    try {
        parse_scenario(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

const char* kWrongOrders = R"(id = "wrong_orders"
topic = "deliberately wrong expectation"
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

TEST_SUITE("scenarios") {

TEST_CASE("config round trip") {
    auto doc = parse_config("a = 1\nb = \"x y\" # note\n[t]\nl = [1, -2, 3]\n[[arr]]\nk = \"v\"\n[[arr]]\nk = \"w\"\n");
    REQUIRE(doc.sections.size() == 4);
    CHECK(doc.find("")->values.get_int("a") == 1);
    CHECK(doc.find("t")->values.get_list("l") == std::vector<long long>{1, -2, 3});
    CHECK(doc.all("arr").size() == 2);
    auto again = parse_config(serialize_config(doc));
    REQUIRE(again.sections.size() == doc.sections.size());
    for (std::size_t i = 0; i < doc.sections.size(); ++i) CHECK(again.sections[i].values == doc.sections[i].values);
    CHECK(quote("a\"b") == "\"a\\\"b\"");
}

TEST_CASE("config errors") {
    CHECK_THROWS_AS(parse_config("a = 1\na = 2\n"), ParseError);
    CHECK_THROWS_AS(parse_config("a = [1, x]\n"), ParseError);
    CHECK_THROWS_AS(parse_config("a = \"open\n"), ParseError);
    CHECK_THROWS_AS(parse_config("[t\n"), ParseError);
}

TEST_CASE("every catalogued scenario survives serialize and parse") {
    const auto& cat = builtin_catalog();
    CHECK(cat.size() >= 20);
    for (const auto& s : cat) {
        CAPTURE(s.id);
        CHECK(parse_scenario(serialize_scenario(s)) == s);
        CHECK(parse_scenario(builtin_source(s.id)) == s);
        CHECK(load_scenario(s.id) == s);
    }
    for (const char* id : {"ex3_3_go8", "prop6_1_go6_q2", "prop6_2_g2_in_d4"}) CHECK(load_scenario(id).id == id);
}

TEST_CASE("scenario schema errors name the line") {
    CHECK(error_text("id = \"x\"\n[elements.a]\nkind = \"transvection\"\n").find("missing required key 'group'") !=
          std::string::npos);
    CHECK(error_line("id = \"x\"\n[group]\nname = \"SL\"\nn = 3\nq = 2\n[[checks]]\nkind = \"no_such_check\"\n") == 7);
    CHECK(error_line("id = \"x\"\n[group]\nname = \"SL\"\n[elements.a]\nkind = \"wobble\"\n") == 5);
    CHECK(error_line("id = \"x\"\nfoo = 1\n[group]\nname = \"SL\"\n") == 2);
    CHECK(error_line("id = \"x\"\n[group]\nname = \"SL\"\nn = 3\nq = 2\n[[checks]]\nkind = \"class_size_eq\"\nx = \"ghost\"\n"
                     "expected = 1\n") > 0);
    CHECK_THROWS_AS(load_scenario("/nonexistent/file.toml"), Error);
}

TEST_CASE("group names") {
    CHECK(group_label(parse_group_name("S8ext")) == group_label(parse_group_name("PGLext:4:2")));
    CHECK(parse_group_name("GOplus:8:2").get_int("n") == 8);
    CHECK(parse_group_name("SL2wr2:5").get_int("q") == 5);
    CHECK_THROWS(parse_group_name("Foo:2:2"));
    CHECK_THROWS(parse_group_name("SL:2"));
}

TEST_CASE("report JSON round trip") {
    Report r;
    r.id = "x";
    r.outcome = "FAIL";
    r.group = "SL:3:2";
    r.seed = 4;
    r.wall_ms = 1.5;
    r.caps.class_cap = 77;
    CheckResult c;
    c.kind = "orbit_count_eq";
    c.expected = 2;
    c.actual = json{{"count", 3}};
    c.witness = json{{"x", "100/010/001"}};
    c.status = "FAIL";
    c.reason = "assertion";
    r.checks.push_back(c);
    auto back = parse_reports(serialize_reports({r}));
    REQUIRE(back.size() == 1);
    CHECK(back[0] == r);
    auto untimed = parse_reports(serialize_reports({r}, false));
    CHECK(untimed[0].wall_ms == 0);
    CHECK(parse_reports(serialize_reports({})).empty());
}

TEST_CASE("a wrong expectation fails with a witness that reverifies") {
    auto spec = parse_scenario(kWrongOrders);
    RunOptions o;
    auto rep = run_scenario(spec, o);
    CHECK(rep.outcome == "FAIL");
    REQUIRE(rep.checks.size() == 1);
    const auto& c = rep.checks[0];
    CHECK(c.status == "FAIL");
    CHECK(c.reason == "assertion");
    REQUIRE(c.witness.has_value());
    CHECK(reverify_witness(spec, c, o));
    // A tampered witness does not reproduce.
    auto forged = c;
    (*forged.witness)["y"] = (*forged.witness)["x"];
    CHECK_FALSE(reverify_witness(spec, forged, o));
}

TEST_CASE("seeds, caps and echo") {
    RunOptions o;
    o.seed = 12;
    o.caps.class_cap = 123456;
    auto rep = run_scenario(load_scenario("s8_transvection_polarity_orbits"), o);
    CHECK(rep.passed());
    CHECK(rep.seed == 12);
    CHECK(rep.caps.class_cap == 123456);
}

TEST_CASE("caps turn into FAIL with a reason") {
    RunOptions o;
    o.caps.class_cap = 100;
    auto rep = run_scenario(load_scenario("ex3_3_go8"), o);
    CHECK(rep.outcome == "FAIL");
    bool capped = false;
    for (const auto& c : rep.checks) capped = capped || c.reason.rfind("cap_exceeded", 0) == 0;
    CHECK(capped);
}

TEST_CASE("gated scenarios are skipped without data") {
    RunOptions o;
    o.data_dir = (fs::temp_directory_path() / "cosetlab_no_data").string();
    o.base_url = "";
    auto rep = run_scenario(load_scenario("prop6_2_g2_in_d4"), o);
    CHECK(rep.outcome == "SKIPPED(GatedDataMissing)");
    CHECK(rep.skipped());
    CHECK(rep.checks.empty());
}

TEST_CASE("serial and parallel runs give identical reports") {
    for (const char* id : {"ex3_3_go8", "so7_3_nondegenerate_orbit_bound", "commutator_non_p_sp4_2",
                           "sl2_wreath_class_growth"}) {
        CAPTURE(id);
        RunOptions s, p;
        s.exec = kernels::Exec::serial;
        auto a = run_scenario(load_scenario(id), s);
        auto b = run_scenario(load_scenario(id), p);
        CHECK(a.passed());
        CHECK(serialize_reports({a}, false) == serialize_reports({b}, false));
    }
}

TEST_CASE("oracle mode agrees on small scenarios") {
    RunOptions o;
    o.oracle = true;
    for (const char* id : {"s8_transvection_polarity_orbits", "pgl27_unipotent_outer_eliminations", "commutator_non_p_sl3_2"}) {
        CAPTURE(id);
        auto rep = run_scenario(load_scenario(id), o);
        CHECK(rep.passed());
    }
}

TEST_CASE("file-backed groups with straight-line programs") {
    auto dir = fs::temp_directory_path() / ("cosetlab_files_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir);
    {
        std::ofstream(dir / "s6.txt") << "deg 6\n(1,2,3,4,5,6)\n(1,2)\n";
        std::ofstream(dir / "s6_words.slp") << "inp a b\npwr 3 a c\ncp b t\noup c t\n";
    }
    auto spec = parse_scenario(R"(id = "s6_file"
topic = "S6 from a cycles file"
requires = "s6.txt s6_words.slp"
[group]
file = "s6.txt"
order = 720
[elements.t]
kind = "slp"
program_file = "s6_words.slp"
output = 2
[elements.c]
kind = "slp"
program_file = "s6_words.slp"
output = 1
[elements.g2]
kind = "generator"
index = 2
[[checks]]
kind = "class_size_eq"
x = "t"
expected = 15
[[checks]]
kind = "class_size_eq"
x = "c"
expected = 15
[[checks]]
kind = "orbit_lengths_eq"
x = "g2"
set = "points"
expected = [2, 4]
[[checks]]
kind = "orbit_count_eq"
x = "t"
d = "c"
expected = 2
)");
    RunOptions o;
    o.data_dir = dir.string();
    auto rep = run_scenario(spec, o);
    CHECK(rep.passed());
    for (const auto& c : rep.checks) CHECK_MESSAGE(c.status == "PASS", c.kind << " " << c.actual.dump());
    fs::remove_all(dir);
}

TEST_CASE("group oracle suite") {
    RunOptions o;
    for (const char* g : {"SL:3:2", "PGLext:3:2", "SL2wr2:3"}) {
        CAPTURE(g);
        auto rep = run_group_oracles(parse_group_name(g), o);
        for (const auto& l : rep.lines) CHECK_MESSAGE(l.ok, l.name << ": " << l.detail);
        CHECK(rep.ok());
    }
    CHECK_THROWS_AS(run_group_oracles(parse_group_name("Sp:4:3"), o), Unsupported);
}

}
