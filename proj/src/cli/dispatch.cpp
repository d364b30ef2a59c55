#include "cosetlab/cli/dispatch.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "cosetlab/classlab/decompose.hpp"
#include "cosetlab/cli/cache.hpp"
#include "cosetlab/cli/emit.hpp"
#include "cosetlab/ingest/fetch.hpp"
#include "cosetlab/kernels/exec.hpp"
#include "cosetlab/mat/numbered_set.hpp"
#include "cosetlab/scenarios/catalog.hpp"
#include "cosetlab/scenarios/oracle.hpp"
#include "cosetlab/scenarios/runner.hpp"

namespace cosetlab::cli {

using namespace scenarios;
using classlab::ProductKind;

namespace {

struct Globals {
    std::uint64_t seed = 0;
    int threads = 0;
    std::size_t cap_class = CapSettings{}.class_cap;
    std::size_t cap_total = CapSettings{}.total_cap;
    std::size_t memory_cap = CapSettings{}.memory_cap;
    std::string data_dir = "data";
    std::string cache_dir;
    std::string base_url = ingest::default_base_url();
    std::string format = "text";
    bool strict = false;
    bool oracle = false;
    bool serial = false;

    std::unique_ptr<Cache> cache;

    RunOptions run_options() {
        if (!cache_dir.empty() && !cache) cache = std::make_unique<Cache>(cache_dir);
        RunOptions o;
        o.seed = seed;
        o.caps = CapSettings{cap_class, cap_total, memory_cap};
        o.data_dir = data_dir;
        o.base_url = base_url;
        o.cache = cache.get();
        o.oracle = oracle;
        o.strict_warn = strict;
        o.exec = serial ? kernels::Exec::serial : kernels::Exec::parallel;
        return o;
    }
    ResolveOptions resolve_options() {
        auto o = run_options();
        return ResolveOptions{o.seed, o.data_dir, o.base_url, o.cache, o.caps.memory_cap};
    }
};

// Input problems that should exit with the usage code.
struct UsageError : Error {
    using Error::Error;
};

ParamValue parse_value(const std::string& v) {
    auto as_int = [](const std::string& s, long long& out) {
        std::size_t pos = 0;
        try {
            out = std::stoll(s, &pos);
        } catch (const std::exception&) {
            return false;
        }
        return pos == s.size();
    };
    long long i = 0;
    if (as_int(v, i)) return i;
    if (v.find(';') != std::string::npos) {
        std::vector<long long> list;
        std::stringstream ss(v);
        std::string item;
        while (std::getline(ss, item, ';')) {
            if (!as_int(item, i)) return v;
            list.push_back(i);
        }
        return list;
    }
    return v;
}

// The class of transpositions of S8 = SL4(2).2 is the class of the symplectic
// polarity.
ElementSpec alias(ElementSpec e) {
    if (e.kind == "transposition") {
        e.kind = "polarity";
        if (!e.params.has("form")) e.params.set("form", std::string("symplectic"));
    }
    return e;
}

template <perm::GroupAction A>
using H = std::shared_ptr<const classlab::ClassHandle<A>>;

// Element specs and @selectors to classes. A bare alt_involution stands for
// every alternating involution class, one per even rank.
template <perm::GroupAction A>
std::vector<H<A>> resolve_classes(const World<A>& w, classlab::ClassRegistry<A>& reg, const std::vector<std::string>& items,
                                  const std::string& role) {
    std::vector<H<A>> out;
    std::set<const classlab::ClassHandle<A>*> seen;
    auto push = [&](const H<A>& h) {
        if (seen.insert(h.get()).second) out.push_back(h);
    };
    std::optional<std::vector<H<A>>> all;
    for (const auto& item : items) {
        if (!item.empty() && item[0] == '@') {
            if (w.group->order() > 1'000'000) throw UsageError("selector " + item + " needs a group of order <= 10^6");
            if (!all) all = classlab::all_classes(reg);
            for (const auto& h : *all) {
                bool pe = classlab::is_prime_power_of(h->fingerprint().order, w.p) && h->size() > 1;
                bool in = w.inner(h->representative());
                if (item == "@all" || (item == "@p" && pe) || (item == "@inner_p" && pe && in) ||
                    (item == "@outer_p" && pe && !in))
                    push(h);
                else if (item != "@p" && item != "@inner_p" && item != "@outer_p")
                    throw UsageError("unknown class selector '" + item + "'");
            }
            continue;
        }
        auto e = alias(parse_element_spec(item, role));
        if (e.kind == "alt_involution" && !e.params.has("rank")) {
            for (long long rank = 2;; rank += 2) {
                e.params.set("rank", rank);
                typename A::Element x;
                try {
                    x = w.make(e);
                } catch (const Unsupported&) {
                    break;
                }
                push(reg.enumerate(x));
            }
            continue;
        }
        push(reg.enumerate(w.make(e)));
    }
    if (out.empty()) throw UsageError("--" + role + " selects no classes");
    return out;
}

template <perm::GroupAction A>
classlab::ClassRegistry<A> registry(const std::shared_ptr<World<A>>& w, const RunOptions& o) {
    return classlab::ClassRegistry<A>(w->group, classlab::Caps{o.caps.class_cap, o.caps.total_cap}, o.seed, o.exec,
                                      [w](const typename A::Element& g) { return w->coset_label(g); });
}

AnyWorld world_for(const std::string& name, Globals& g) {
    Params p;
    try {
        p = parse_group_name(name);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    return resolve_group(p, g.resolve_options());
}

std::string join(const std::vector<std::uint64_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : ", ") + std::to_string(x);
    return "{" + s + "}";
}

int cmd_construct(Globals& g, const std::string& group, std::ostream& out) {
    auto world = world_for(group, g);
    std::visit(
        [&](auto& w) {
            const auto& G = *w->group;
            std::vector<std::vector<std::string>> rows{{"group", w->label},
                                                       {"order", std::to_string(G.order())},
                                                       {"generators", std::to_string(G.generators().size())},
                                                       {"base length", std::to_string(G.base().size())}};
            if (w->classical) rows.push_back({"formula", std::to_string(mat::group_order_formula(w->classical->spec))});
            out << format_table(rows);
        },
        world);
    if (g.oracle) {
        auto line = order_oracle(parse_group_name(group), g.seed);
        out << (line.ok ? "PASS " : "FAIL ") << line.name << ": " << line.detail << "\n";
        return line.ok ? kExitPass : kExitFail;
    }
    return kExitPass;
}

int cmd_classes(Globals& g, const std::string& group, bool p_only, std::ostream& out) {
    auto o = g.run_options();
    auto world = world_for(group, g);
    std::visit(
        [&](auto& w) {
            using A = typename std::decay_t<decltype(*w)>::Action;
            if (w->group->order() > 1'000'000) throw UsageError("classes needs a group of order <= 10^6");
            auto reg = registry<A>(w, o);
            std::vector<std::vector<std::string>> rows{{"#", "order", "size", "centralizer", "coset", "fingerprint"}};
            std::size_t i = 0;
            for (const auto& h : classlab::all_classes(reg)) {
                ++i;
                if (p_only && !classlab::is_prime_power_of(h->fingerprint().order, w->p)) continue;
                rows.push_back({std::to_string(i), std::to_string(h->fingerprint().order), std::to_string(h->size()),
                                std::to_string(h->centralizer_order()), w->coset_label(h->representative()),
                                h->fingerprint().str()});
            }
            out << w->label << ": " << i << " classes\n" << format_table(rows);
        },
        world);
    return kExitPass;
}

int cmd_product(Globals& g, ProductKind kind, const std::string& group, const std::vector<std::string>& c,
                const std::vector<std::string>& d, std::ostream& out) {
    auto o = g.run_options();
    auto world = world_for(group, g);
    std::visit(
        [&](auto& w) {
            using A = typename std::decay_t<decltype(*w)>::Action;
            auto reg = registry<A>(w, o);
            auto Cs = resolve_classes<A>(*w, reg, c, "c");
            auto Ds = resolve_classes<A>(*w, reg, d, "d");
            std::vector<std::vector<std::string>> rows{{"|C|", "|D|", "order", "class size", "multiplicity", "coset"}};
            json js = json::array();
            std::set<std::uint64_t> orders;
            for (const auto& C : Cs)
                for (const auto& D : Ds) {
                    auto dec = classlab::decompose(reg, *C, *D, kind);
                    if (dec.total() != D->size()) throw VerificationFailure("multiplicities do not sum to |D|");
                    for (const auto& r : dec.rows) {
                        orders.insert(r.fp.order);
                        rows.push_back({std::to_string(C->size()), std::to_string(D->size()), std::to_string(r.fp.order),
                                        std::to_string(r.class_size), std::to_string(r.multiplicity),
                                        w->coset_label(r.representative)});
                        js.push_back({{"c_size", C->size()},
                                      {"d_size", D->size()},
                                      {"order", r.fp.order},
                                      {"class_size", r.class_size},
                                      {"multiplicity", r.multiplicity},
                                      {"coset", w->coset_label(r.representative)},
                                      {"representative", w->encode(r.representative)}});
                    }
                }
            if (parse_format(g.format) == Format::structured) {
                out << json{{"group", w->label},
                            {"mode", kind == ProductKind::product ? "product" : "commutator"},
                            {"rows", js},
                            {"orders", orders}}
                           .dump(2)
                    << "\n";
                return;
            }
            out << w->label << ": " << (kind == ProductKind::product ? "products" : "commutators") << " of "
                << Cs.size() << " x " << Ds.size() << " class pairs\n"
                << format_table(rows) << "orders " << join({orders.begin(), orders.end()}) << "\n";
        },
        world);
    return kExitPass;
}

int cmd_orbits(Globals& g, const std::string& group, const std::string& x, const std::string& d_class,
               const std::string& set, int norm, std::ostream& out) {
    if (d_class.empty() == set.empty()) throw UsageError("orbits needs exactly one of --d-class and --set");
    if (!set.empty() && set != "points") {
        try {
            mat::set_kind_from_string(set);
        } catch (const Unsupported& e) {
            throw UsageError(e.what());
        }
    }
    auto o = g.run_options();
    auto world = world_for(group, g);
    std::visit(
        [&](auto& w) {
            using A = typename std::decay_t<decltype(*w)>::Action;
            auto reg = registry<A>(w, o);
            auto X = resolve_classes<A>(*w, reg, {x}, "x");
            if (X.size() != 1) throw UsageError("--x must name one class");
            const auto& gens = X[0]->centralizer_generators();
            kernels::OrbitPartition part;
            if (!d_class.empty()) {
                auto D = resolve_classes<A>(*w, reg, {d_class}, "d-class");
                if (D.size() != 1) throw UsageError("--d-class must name one class");
                part = classlab::orbits_on_class(gens, *D[0], o.exec);
            } else if constexpr (std::is_same_v<typename A::Element, mat::Matrix>) {
                if (!w->classical) throw UsageError("--set needs a classical group");
                mat::NumberedSet ns(mat::set_kind_from_string(set), w->classical->form, norm);
                std::vector<perm::Permutation> ps;
                for (const auto& h : gens) ps.push_back(ns.permutation_of(h));
                part = classlab::orbit_lengths_on_set(ps, ns.size());
            } else {
                if (set != "points") throw UsageError("permutation groups only act on --set points");
                part = classlab::orbit_lengths_on_set(gens, w->group->degree());
            }
            if (parse_format(g.format) == Format::structured) {
                out << json{{"group", w->label}, {"count", part.sizes.size()}, {"lengths", part.sizes}}.dump(2) << "\n";
                return;
            }
            out << part.sizes.size() << (part.sizes.size() == 1 ? " orbit" : " orbits") << ", lengths "
                << join(part.sizes) << "\n";
        },
        world);
    return kExitPass;
}

int cmd_scenario_run(Globals& g, bool all, const std::vector<std::string>& ids, const std::vector<std::string>& files,
                     std::ostream& out) {
    std::vector<ScenarioSpec> specs;
    if (all) specs = builtin_catalog();
    std::set<std::string> known;
    for (const auto& s : builtin_catalog()) known.insert(s.id);
    for (const auto& id : ids) {
        if (!known.count(id) && !std::filesystem::exists(id)) throw UsageError("no scenario '" + id + "'");
        specs.push_back(load_scenario(id));
    }
    for (const auto& f : files) {
        if (!std::filesystem::exists(f)) throw UsageError("no scenario file " + f);
        specs.push_back(load_scenario(f));
    }
    if (specs.empty() && !all) throw UsageError("scenario run needs --all, ids or --file");
    auto o = g.run_options();
    std::vector<Report> reports;
    for (const auto& s : specs) reports.push_back(run_scenario(s, o));
    out << emit_report(reports, parse_format(g.format));
    return exit_code(reports, g.strict);
}

int cmd_scenario_list(std::ostream& out) {
    std::vector<std::vector<std::string>> rows{{"id", "group", "checks", "gated", "topic"}};
    for (const auto& s : builtin_catalog())
        rows.push_back({s.id, group_label(s.group), std::to_string(s.checks.size()), s.gated() ? "yes" : "no", s.topic});
    out << format_table(rows);
    return kExitPass;
}

int cmd_scenario_show(const std::string& id, std::ostream& out) {
    for (const auto& s : builtin_catalog())
        if (s.id == id) {
            out << builtin_source(id);
            return kExitPass;
        }
    if (!std::filesystem::exists(id)) throw UsageError("no built-in scenario '" + id + "'");
    out << serialize_scenario(load_scenario(id));
    return kExitPass;
}

int cmd_fetch(Globals& g, const std::vector<std::string>& names, const std::string& sha, std::ostream& out,
              std::ostream& err) {
    int rc = kExitPass;
    for (const auto& n : names) {
        try {
            auto f = ingest::fetch(n, g.base_url, g.data_dir, sha.empty() ? std::nullopt : std::optional<std::string>(sha));
            out << f.name << "  " << f.checksum << "  " << f.path << "\n";
        } catch (const GatedDataMissing& e) {
            err << n << ": " << e.what() << "\n";
            rc = std::max(rc, g.strict ? kExitSkipped : kExitFail);
        }
    }
    return rc;
}

const std::vector<std::string> kOracleGroups = {"SL:2:3",    "GL:2:3",     "SL:2:5",     "SL:3:2",
                                                "GOplus:4:2", "GOminus:4:2", "SO:3:3",    "Sp:4:2",
                                                "PGLext:3:2", "SL2wr2:3"};

int cmd_oracle(Globals& g, std::vector<std::string> groups, std::ostream& out) {
    if (groups.empty()) groups = kOracleGroups;
    auto o = g.run_options();
    bool ok = true;
    for (const auto& name : groups) {
        Params p;
        try {
            p = parse_group_name(name);
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
        auto rep = run_group_oracles(p, o);
        for (const auto& l : rep.lines) {
            out << (l.ok ? "PASS " : "FAIL ") << rep.group << ": " << l.name;
            if (!l.detail.empty()) out << " (" << l.detail << ")";
            out << "\n";
        }
        ok = ok && rep.ok();
    }
    return ok ? kExitPass : kExitFail;
}

}  // namespace

ElementSpec parse_element_spec(const std::string& text, const std::string& name) {
    ElementSpec e;
    e.name = name;
    auto colon = text.find(':');
    e.kind = text.substr(0, colon);
    if (e.kind.empty()) throw UsageError("empty element kind in '" + text + "'");
    if (colon == std::string::npos) return e;
    std::stringstream ss(text.substr(colon + 1));
    std::string kv;
    while (std::getline(ss, kv, ',')) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("expected key=value in '" + text + "'");
        e.params.set(kv.substr(0, eq), parse_value(kv.substr(eq + 1)));
    }
    return e;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Conjugacy class products, commutators and centralizer orbits in finite classical groups"};
    app.require_subcommand(1);
    Globals g;
    auto* caps = app.add_option_group("caps");
    app.add_option("--seed", g.seed, "Seed for every randomized construction")->capture_default_str();
    app.add_option("--threads", g.threads, "OpenMP threads (0 = all cores)");
    caps->add_option("--cap-class", g.cap_class, "Largest class enumerated")->capture_default_str();
    caps->add_option("--cap-total", g.cap_total, "Largest number of class elements held at once")->capture_default_str();
    caps->add_option("--memory-cap", g.memory_cap, "Bytes allowed for stabilizer chains")->capture_default_str();
    app.add_option("--data-dir", g.data_dir, "Directory of generator files")->capture_default_str();
    app.add_option("--cache-dir", g.cache_dir, "Directory for cached stabilizer chains");
    app.add_option("--base-url", g.base_url, "Where missing generator files are downloaded from");
    app.add_option("--format", g.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--strict", g.strict, "Exit 3 when a gated scenario is skipped; count WARN as FAIL");
    app.add_flag("--oracle", g.oracle, "Cross-check against brute force where the instance is small");
    app.add_flag("--serial", g.serial, "Use the serial reference kernels");

    std::string group;
    auto* construct = app.add_subcommand("construct", "Build a group and print its order");
    construct->add_option("--group", group, "Group name, e.g. GOplus:8:2 or S8ext")->required();

    bool p_only = false;
    auto* classes = app.add_subcommand("classes", "List the conjugacy classes of a small group");
    classes->add_option("--group", group)->required();
    classes->add_flag("--p-only", p_only, "Only classes of p-elements");

    std::vector<std::string> c, d;
    auto* product = app.add_subcommand("product", "Decompose C D into classes");
    auto* commutator = app.add_subcommand("commutator", "Decompose [C, D] into classes");
    for (auto* sc : {product, commutator}) {
        sc->add_option("--group", group)->required();
        sc->add_option("--c", c, "Element spec kind[:key=val,...] or @selector; repeatable")->required();
        sc->add_option("--d", d, "Element spec or @selector; repeatable")->required();
    }

    std::string x, d_class, set;
    int norm = 0;
    auto* orbits = app.add_subcommand("orbits", "Orbits of the centralizer of x on a class or a set");
    orbits->add_option("--group", group)->required();
    orbits->add_option("--x", x)->required();
    orbits->add_option("--d-class", d_class);
    orbits->add_option("--set", set, "vectors_nonzero, points_projective, points_nonsingular, points_singular, nondegenerate_one_spaces, vectors_of_norm (with --norm), or points");
    orbits->add_option("--norm", norm);

    bool all = false;
    std::vector<std::string> ids, files;
    std::string show_id;
    auto* scenario = app.add_subcommand("scenario", "Run, list or show catalogued scenarios");
    scenario->require_subcommand(1);
    auto* run = scenario->add_subcommand("run", "Run scenarios and print a report");
    run->add_flag("--all", all, "Every built-in scenario");
    run->add_option("ids", ids, "Built-in scenario ids");
    run->add_option("--file", files, "Scenario files; repeatable");
    auto* list = scenario->add_subcommand("list", "List the built-in scenarios");
    auto* show = scenario->add_subcommand("show", "Print a scenario file");
    show->add_option("id", show_id)->required();

    std::vector<std::string> names;
    std::string sha;
    auto* fetch = app.add_subcommand("fetch", "Download generator files into the data directory");
    fetch->add_option("names", names)->required();
    fetch->add_option("--sha256", sha, "Expected checksum");

    std::vector<std::string> oracle_groups;
    auto* oracle = app.add_subcommand("oracle", "Brute-force cross-checks on groups of order <= 5000");
    oracle->add_option("--group", oracle_groups, "Repeatable; defaults to a fixed list of small groups");

    for (auto* sc : app.get_subcommands({})) sc->fallthrough();
    scenario->fallthrough();
    for (auto* sc : scenario->get_subcommands({})) sc->fallthrough();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kExitUsage;
    }

    try {
        kernels::set_threads(g.threads);
        if (construct->parsed()) return cmd_construct(g, group, out);
        if (classes->parsed()) return cmd_classes(g, group, p_only, out);
        if (product->parsed()) return cmd_product(g, ProductKind::product, group, c, d, out);
        if (commutator->parsed()) return cmd_product(g, ProductKind::commutator, group, c, d, out);
        if (orbits->parsed()) return cmd_orbits(g, group, x, d_class, set, norm, out);
        if (run->parsed()) return cmd_scenario_run(g, all, ids, files, out);
        if (list->parsed()) return cmd_scenario_list(out);
        if (show->parsed()) return cmd_scenario_show(show_id, out);
        if (fetch->parsed()) return cmd_fetch(g, names, sha, out, err);
        if (oracle->parsed()) return cmd_oracle(g, oracle_groups, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const GatedDataMissing& e) {
        err << "skipped: " << e.what() << "\n";
        return g.strict ? kExitSkipped : kExitFail;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}

int dispatch(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dispatch(args, std::cout, std::cerr);
}

}  // namespace cosetlab::cli
