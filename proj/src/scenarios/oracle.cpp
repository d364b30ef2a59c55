#include "cosetlab/scenarios/oracle.hpp"

#include <algorithm>

#include "cosetlab/classlab/decompose.hpp"
#include "cosetlab/error.hpp"

namespace cosetlab::scenarios {

namespace {

using classlab::ProductKind;

template <perm::GroupAction A>
void group_oracles(const World<A>& w, const RunOptions& opt, OracleReport& rep) {
    const auto order = w.group->order();
    if (order > kOracleGroupOrder)
        throw Unsupported(w.label + " has order " + std::to_string(order) + ", above the brute-force limit");
    classlab::ClassRegistry<A> reg(w.group, classlab::Caps{opt.caps.class_cap, opt.caps.total_cap}, opt.seed, opt.exec);
    auto all = classlab::all_classes(reg);

    std::uint64_t sum = 0;
    bool orbit_stab = true;
    for (const auto& c : all) {
        sum += c->size();
        orbit_stab = orbit_stab && c->size() * c->centralizer_order() == order;
    }
    rep.lines.push_back({"class sizes sum to |G|", sum == order, std::to_string(all.size()) + " classes"});
    rep.lines.push_back({"|class| * |centralizer| = |G|", orbit_stab, ""});

    std::size_t pairs = 0, bad_sum = 0, bad_sym = 0, bad_bf = 0, bad_orbits = 0;
    for (const auto& C : all)
        for (const auto& D : all) {
            ++pairs;
            for (auto kind : {ProductKind::product, ProductKind::commutator}) {
                auto d = classlab::decompose(reg, *C, *D, kind, classlab::FixSide::c);
                if (d.total() != D->size()) ++bad_sum;
                auto e = classlab::decompose(reg, *C, *D, kind, classlab::FixSide::d);
                bool sym = d.rows.size() == e.rows.size();
                for (std::size_t i = 0; sym && i < d.rows.size(); ++i)
                    sym = d.rows[i].class_index == e.rows[i].class_index &&
                          d.rows[i].multiplicity == e.rows[i].multiplicity;
                if (!sym) ++bad_sym;
                auto bf = classlab::decompose_bruteforce(reg, *C, *D, kind);
                bool same = bf.size() == d.rows.size();
                for (const auto& r : d.rows) {
                    auto it = bf.find(r.class_index);
                    same = same && it != bf.end() && it->second == C->size() * r.multiplicity;
                }
                if (!same) ++bad_bf;
            }
            auto fast = classlab::orbits_on_pairs(*C, *D, opt.exec);
            auto slow = classlab::pair_orbits_bruteforce(*C, *D);
            if (fast.count() != slow.count()) ++bad_orbits;
        }
    auto line = [&](const std::string& name, std::size_t bad) {
        rep.lines.push_back({name, bad == 0, std::to_string(pairs) + " class pairs, " + std::to_string(bad) + " mismatches"});
    };
    line("multiplicities sum to |D|", bad_sum);
    line("|C| m_E = |D| m'_E", bad_sym);
    line("decompositions match all-pairs brute force", bad_bf);
    line("orbit counts match C x D brute force", bad_orbits);
}

}  // namespace

bool OracleReport::ok() const {
    return !lines.empty() && std::all_of(lines.begin(), lines.end(), [](const auto& l) { return l.ok; });
}

OracleReport run_group_oracles(const Params& group, const RunOptions& opt) {
    OracleReport rep;
    rep.group = group_label(group);
    ResolveOptions ro{opt.seed, opt.data_dir, opt.base_url, opt.cache, opt.caps.memory_cap};
    auto world = resolve_group(group, ro);
    std::visit([&](auto& w) { group_oracles(*w, opt, rep); }, world);
    rep.lines.push_back(order_oracle(group, opt.seed));
    return rep;
}

OracleLine order_oracle(const Params& group, std::uint64_t seed) {
    OracleLine line;
    line.name = "order of " + group_label(group) + " from verified Schreier-Sims = closed formula";
    ResolveOptions ro;
    ro.seed = seed;
    auto world = resolve_group(group, ro);
    std::uint64_t formula = 0, verified = 0;
    std::visit(
        [&](auto& w) {
            formula = w->group->order();
            using A = typename std::decay_t<decltype(*w)>::Action;
            perm::BuildOptions o;
            o.seed = seed + 1;
            auto g = perm::Group<A>::build(w->group->action(), w->group->generators(), o);
            verified = g.order();
        },
        world);
    if (auto* mw = std::get_if<std::shared_ptr<MatrixWorld>>(&world); mw && (*mw)->classical)
        formula = mat::group_order_formula((*mw)->classical->spec);
    else if (group.has("name") && group.get_string("name") == "SL2wr2")
        formula = mat::group_order_formula(mat::GroupSpec{mat::Family::wreath_SL2, 2, static_cast<int>(group.get_int("q")),
                                                          mat::ActionKind::vectors_nonzero});
    else if (group.has("name") && group.get_string("name") == "PGLext")
        formula = mat::group_order_formula(mat::GroupSpec{mat::Family::SL_dual_ext, static_cast<int>(group.get_int("n")),
                                                          static_cast<int>(group.get_int("q")),
                                                          mat::ActionKind::vectors_plus_covectors});
    line.ok = formula == verified;
    line.detail = "verified " + std::to_string(verified) + ", formula " + std::to_string(formula);
    return line;
}

}  // namespace cosetlab::scenarios
