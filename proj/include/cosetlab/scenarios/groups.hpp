#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "cosetlab/mat/classical.hpp"
#include "cosetlab/mat/dual.hpp"
#include "cosetlab/mat/wreath.hpp"
#include "cosetlab/params.hpp"
#include "cosetlab/perm/group.hpp"
#include "cosetlab/scenarios/spec.hpp"

namespace cosetlab::scenarios {

// "GOplus:8:2", "Sp:6:2", "SO:7:3", "PGLext:4:3", "SL2wr2:5", and the aliases
// S8ext (PGLext:4:2), PGL27ext (PGLext:3:2), SL43ext (PGLext:4:3). The result is
// the [group] table of a scenario.
Params parse_group_name(const std::string& s);
std::string group_label(const Params& group);

// Group chains persisted between runs. Implementations must hand back a group
// identical to the stored one (same generators, base and strong generators) or
// nothing.
class GroupCache {
public:
    virtual ~GroupCache() = default;
    virtual std::shared_ptr<const mat::MatrixGroup> load_matrix(const std::string& key, int p, int n) = 0;
    virtual void store_matrix(const std::string& key, const mat::MatrixGroup& g) = 0;
    virtual std::shared_ptr<const perm::PermGroup> load_perm(const std::string& key, std::size_t degree) = 0;
    virtual void store_perm(const std::string& key, const perm::PermGroup& g) = 0;
};

struct ResolveOptions {
    std::uint64_t seed = 0;
    std::string data_dir = "data";
    std::string base_url;  // for fetching missing data files
    GroupCache* cache = nullptr;
    std::size_t memory_cap = std::size_t{4} << 30;  // stabilizer chain storage of file-backed groups
};

// A group plus the scenario-facing helpers the runner needs.
template <perm::GroupAction A>
struct World {
    using Action = A;
    using Element = typename A::Element;
    std::string label;
    std::shared_ptr<const perm::Group<A>> group;
    int p = 2;  // the prime for p-element checks
    std::function<bool(const Element&)> inner;
    std::function<Element(const ElementSpec&)> make;
    // Element text in the group's encoding, for witnesses.
    std::function<std::string(const Element&)> encode;
    std::function<Element(const std::string&)> decode;  // inverse of encode, with a membership test
    // Set for classical matrix groups only.
    std::shared_ptr<const mat::ClassicalGroup> classical;
    std::string coset_label(const Element& g) const { return inner(g) ? "inner" : "outer"; }
};

using MatrixWorld = World<mat::MatrixAction>;
using PermWorld = World<perm::PermAction>;
using AnyWorld = std::variant<std::shared_ptr<MatrixWorld>, std::shared_ptr<PermWorld>>;

// Throws GatedDataMissing when a file-backed group's data is absent.
AnyWorld resolve_group(const Params& group, const ResolveOptions& opt);

// The same group with q replaced (for checks sweeping q).
Params with_q(const Params& group, long long q);

}  // namespace cosetlab::scenarios
