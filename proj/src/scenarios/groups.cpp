#include "cosetlab/scenarios/groups.hpp"

#include <filesystem>
#include <mutex>
#include <sstream>

#include "cosetlab/error.hpp"
#include "cosetlab/ingest/fetch.hpp"
#include "cosetlab/ingest/formats.hpp"
#include "cosetlab/ingest/slp.hpp"
#include "cosetlab/mat/elements.hpp"

namespace cosetlab::scenarios {

namespace {

constexpr const char* kCacheVersion = "cosetlab-chain-v1";

struct Alias {
    const char* name;
    const char* family;
    int n, q;
};
const Alias kAliases[] = {{"S8ext", "PGLext", 4, 2}, {"PGL27ext", "PGLext", 3, 2}, {"SL43ext", "PGLext", 4, 3}};

const std::pair<const char*, mat::Family> kFamilies[] = {
    {"SL", mat::Family::SL},           {"GL", mat::Family::GL},      {"Sp", mat::Family::Sp},
    {"GOplus", mat::Family::GO_plus},  {"GOminus", mat::Family::GO_minus}, {"SO", mat::Family::SO_odd},
};

std::optional<mat::Family> classical_family(const std::string& name) {
    for (const auto& [k, f] : kFamilies)
        if (name == k) return f;
    return std::nullopt;
}

int to_int(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw Error("group name: " + what + " must be an integer, got '" + s + "'");
}

// Element lookup shared by every kind of world: data-file generators and SLP
// outputs work on any group; everything else goes to the native constructor.
template <perm::GroupAction A, class Native>
std::function<typename A::Element(const ElementSpec&)> element_maker(std::shared_ptr<const perm::Group<A>> g,
                                                                     std::string data_dir, Native native) {
    return [g, data_dir, native](const ElementSpec& e) -> typename A::Element {
        const auto& a = g->action();
        if (e.kind == "generator") {
            auto i = e.params.get_int("index");
            if (i < 1 || static_cast<std::size_t>(i) > g->generators().size())
                throw Error("element '" + e.name + "': generator index " + std::to_string(i) + " out of range");
            return g->generators()[static_cast<std::size_t>(i - 1)];
        }
        if (e.kind == "slp") {
            std::string text;
            if (e.params.has("program_file"))
                text = ingest::load_generator_file((std::filesystem::path(data_dir) / e.params.get_string("program_file")).string())
                           .payload;
            else
                text = e.params.get_string("program");
            auto prog = ingest::parse_slp(text);
            std::vector<typename A::Element> inputs(g->generators().begin(),
                                                    g->generators().begin() +
                                                        std::min(g->generators().size(), prog.inputs.size()));
            auto out = ingest::eval_slp(
                prog, inputs, [&](const auto& x, const auto& y) { return a.multiply(x, y); },
                [&](const auto& x) { return a.inverse(x); }, [&] { return a.identity(); });
            auto k = e.params.get_int("output", 1);
            if (k < 1 || static_cast<std::size_t>(k) > out.size())
                throw Error("element '" + e.name + "': SLP output " + std::to_string(k) + " out of range");
            auto x = out[static_cast<std::size_t>(k - 1)];
            if (!g->contains(x)) throw NotInGroup("element '" + e.name + "' is not in the group");
            return x;
        }
        auto x = native(e);
        if (!g->contains(x)) throw NotInGroup("element '" + e.name + "' (" + e.kind + ") is not in the group");
        return x;
    };
}

mat::Matrix decode_matrix(const std::string& s, int p, int n) {
    std::vector<std::vector<int>> rows;
    std::stringstream ss(s);
    std::string row;
    while (std::getline(ss, row, '/')) {
        std::vector<int> r;
        for (char c : row) {
            if (c == ' ') continue;
            if (c < '0' || c > '9' || c - '0' >= p) throw ParseError("bad matrix entry '" + std::string(1, c) + "'", 0);
            r.push_back(c - '0');
        }
        if (static_cast<int>(r.size()) != n) throw ParseError("matrix row '" + row + "' has the wrong length", 0);
        rows.push_back(std::move(r));
    }
    if (static_cast<int>(rows.size()) != n) throw ParseError("matrix '" + s + "' has the wrong number of rows", 0);
    return mat::Matrix::from_rows(p, rows);
}

template <class W>
void set_codec(W& w) {
    auto g = w.group;
    if constexpr (std::is_same_v<typename W::Element, mat::Matrix>) {
        w.encode = [](const mat::Matrix& m) { return m.to_string(); };
        w.decode = [g](const std::string& s) {
            auto m = decode_matrix(s, g->action().p, g->action().n);
            if (!g->contains(m)) throw NotInGroup("decoded matrix is not in the group");
            return m;
        };
    } else {
        w.encode = [](const perm::Permutation& x) { return x.to_cycle_string(); };
        w.decode = [g](const std::string& s) {
            auto v = ingest::parse_cycles("deg " + std::to_string(g->degree()) + "\n" + s + "\n");
            if (v.size() != 1) throw ParseError("expected one permutation", 0);
            if (!g->contains(v[0])) throw NotInGroup("decoded permutation is not in the group");
            return v[0];
        };
    }
}

std::shared_ptr<MatrixWorld> classical_world(mat::GroupSpec spec, const ResolveOptions& opt) {
    auto cg = std::make_shared<mat::ClassicalGroup>();
    std::string key = std::string(kCacheVersion) + "|" + spec.str() + "|" + mat::to_string(spec.action) + "|seed=" +
                      std::to_string(opt.seed);
    std::shared_ptr<const mat::MatrixGroup> cached;
    if (opt.cache) cached = opt.cache->load_matrix(key, spec.q, spec.n);
    if (cached && cached->order() == mat::group_order_formula(spec)) {
        cg->spec = spec;
        mat::FormKind fk = mat::form_kind(spec.family);
        cg->form = fk == mat::FormKind::none
                       ? mat::FormSpec{fk, spec.q, spec.n, mat::Matrix(spec.q, spec.n), mat::Matrix(spec.q, spec.n)}
                       : mat::standard_form(fk, spec.q, spec.n);
        cg->generators = cached->generators();
        cg->group = cached;
        cg->points = std::make_shared<const mat::NumberedSet>(mat::set_kind(spec.action), cg->form);
    } else {
        *cg = mat::classical_group(spec, opt.seed);
        if (opt.cache) opt.cache->store_matrix(key, *cg->group);
    }
    auto w = std::make_shared<MatrixWorld>();
    w->label = spec.str();
    w->group = cg->group;
    w->p = spec.q;
    w->classical = cg;
    w->inner = [cg](const mat::Matrix& m) { return cg->inner(m); };
    w->make = element_maker<mat::MatrixAction>(
        cg->group, opt.data_dir, [cg](const ElementSpec& e) { return mat::element_constructor(e.kind, e.params, *cg); });
    set_codec(*w);
    return w;
}

std::string ensure_data_file(const std::string& name, const ResolveOptions& opt) {
    auto path = std::filesystem::path(opt.data_dir) / name;
    if (std::filesystem::exists(path)) return path.string();
    return ingest::fetch(name, opt.base_url, opt.data_dir).path;
}

AnyWorld file_world(const Params& group, const ResolveOptions& opt) {
    auto file = ingest::load_generator_file(ensure_data_file(group.get_string("file"), opt));
    std::optional<std::uint64_t> order;
    if (group.has("order")) order = static_cast<std::uint64_t>(group.get_int("order"));
    auto no_native = [](const ElementSpec& e) {
        return Unsupported("element '" + e.name + "': kind '" + e.kind + "' needs a native group; use generator or slp");
    };
    std::string key = std::string(kCacheVersion) + "|file|" + file.checksum + "|seed=" + std::to_string(opt.seed);
    if (file.format == ingest::Format::matrix_text) {
        auto gens = ingest::parse_matrix_text(file.payload);
        if (gens.empty()) throw ParseError(file.name + ": no generators", 0);
        std::shared_ptr<const mat::MatrixGroup> g;
        if (opt.cache) g = opt.cache->load_matrix(key, gens[0].p(), gens[0].n());
        if (!g) {
            g = std::make_shared<const mat::MatrixGroup>(
                mat::build_matrix_group(gens[0].p(), gens[0].n(), gens, order, opt.seed, file.name));
            if (opt.cache) opt.cache->store_matrix(key, *g);
        }
        auto w = std::make_shared<MatrixWorld>();
        w->label = "file:" + file.name;
        w->group = g;
        w->p = static_cast<int>(group.get_int("p", gens[0].p()));
        w->inner = [](const mat::Matrix&) { return true; };
        w->make = element_maker<mat::MatrixAction>(g, opt.data_dir, [no_native](const ElementSpec& e) -> mat::Matrix {
            throw no_native(e);
        });
        set_codec(*w);
        return w;
    }
    std::vector<perm::Permutation> gens = file.format == ingest::Format::cycles ? ingest::parse_cycles(file.payload)
                                          : file.format == ingest::Format::images
                                              ? ingest::parse_images(file.payload)
                                              : throw ParseError(file.name + ": not a generator file", 0);
    if (gens.empty()) throw ParseError(file.name + ": no generators", 0);
    std::shared_ptr<const perm::PermGroup> g;
    if (opt.cache) g = opt.cache->load_perm(key, gens[0].degree());
    if (!g) {
        g = std::make_shared<const perm::PermGroup>(perm::build_bsgs(gens, order, opt.seed, opt.memory_cap));
        if (opt.cache) opt.cache->store_perm(key, *g);
    }
    auto w = std::make_shared<PermWorld>();
    w->label = "file:" + file.name;
    w->group = g;
    w->p = static_cast<int>(group.get_int("p", 2));
    w->inner = [](const perm::Permutation&) { return true; };
    w->make = element_maker<perm::PermAction>(g, opt.data_dir, [no_native](const ElementSpec& e) -> perm::Permutation {
        throw no_native(e);
    });
    set_codec(*w);
    return w;
}

}  // namespace

Params parse_group_name(const std::string& s) {
    for (const auto& a : kAliases)
        if (s == a.name)
            return Params{{"name", std::string(a.family)}, {"n", static_cast<long long>(a.n)},
                          {"q", static_cast<long long>(a.q)}};
    if (s.rfind("file:", 0) == 0) return Params{{"file", s.substr(5)}};
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty()) throw Error("empty group name");
    Params p{{"name", parts[0]}};
    if (parts[0] == "SL2wr2") {
        if (parts.size() != 2) throw Error("group name: expected SL2wr2:<q>");
        p.set("q", static_cast<long long>(to_int(parts[1], "q")));
        return p;
    }
    if (!classical_family(parts[0]) && parts[0] != "PGLext")
        throw Error("unknown group '" + s + "' (try GOplus:8:2, Sp:6:2, S8ext, SL2wr2:3 or file:<name>)");
    if (parts.size() != 3) throw Error("group name: expected " + parts[0] + ":<n>:<q>");
    p.set("n", static_cast<long long>(to_int(parts[1], "n")));
    p.set("q", static_cast<long long>(to_int(parts[2], "q")));
    return p;
}

std::string group_label(const Params& group) {
    if (group.has("file")) return "file:" + group.get_string("file");
    std::string name = group.get_string("name");
    if (name == "SL2wr2") return "SL2wr2:" + std::to_string(group.get_int("q"));
    return name + ":" + std::to_string(group.get_int("n")) + ":" + std::to_string(group.get_int("q"));
}

Params with_q(const Params& group, long long q) {
    Params g = group;
    g.set("q", q);
    return g;
}

AnyWorld resolve_group(const Params& group, const ResolveOptions& opt) {
    if (group.has("file")) return file_world(group, opt);
    const std::string name = group.get_string("name");
    if (auto fam = classical_family(name)) {
        mat::GroupSpec spec;
        spec.family = *fam;
        spec.n = static_cast<int>(group.get_int("n"));
        spec.q = static_cast<int>(group.get_int("q"));
        spec.action = mat::action_from_string(group.get_string("action", "vectors_nonzero"));
        return classical_world(spec, opt);
    }
    if (name == "PGLext") {
        auto d = std::make_shared<const mat::DualExtension>(
            mat::dual_extension(static_cast<int>(group.get_int("n")), static_cast<int>(group.get_int("q")), opt.seed));
        auto w = std::make_shared<PermWorld>();
        w->label = group_label(group);
        w->group = d->group;
        w->p = d->q;
        w->inner = [d](const perm::Permutation& g) { return d->inner(g); };
        w->make = element_maker<perm::PermAction>(
            d->group, opt.data_dir, [d](const ElementSpec& e) { return mat::dual_element(e.kind, e.params, *d); });
        set_codec(*w);
        return w;
    }
    if (name == "SL2wr2") {
        auto ws = std::make_shared<const mat::WreathSL2>(mat::wreath_sl2(static_cast<int>(group.get_int("q")), opt.seed));
        auto w = std::make_shared<MatrixWorld>();
        w->label = group_label(group);
        w->group = ws->group;
        w->p = ws->q;
        w->inner = [ws](const mat::Matrix& g) { return ws->inner(g); };
        w->make = element_maker<mat::MatrixAction>(
            ws->group, opt.data_dir, [ws](const ElementSpec& e) { return mat::wreath_element(e.kind, e.params, *ws); });
        set_codec(*w);
        return w;
    }
    throw Error("unknown group '" + name + "'");
}

}  // namespace cosetlab::scenarios
