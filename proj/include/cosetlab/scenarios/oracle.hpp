#pragma once

#include <string>
#include <vector>

#include "cosetlab/scenarios/runner.hpp"

namespace cosetlab::scenarios {

struct OracleLine {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct OracleReport {
    std::string group;
    std::vector<OracleLine> lines;
    bool ok() const;
};

// Brute-force cross-checks on a group of order <= kOracleGroupOrder: every
// class has size * centralizer order = |G|; for every pair of classes the
// decomposition matches the all-pairs count, sums to |D| for products and
// commutators, satisfies |C| m_E = |D| m'_E, and the centralizer orbit count
// matches the orbit count on C x D.
OracleReport run_group_oracles(const Params& group, const RunOptions& opt);

// The group order from a deterministic Schreier-Sims run without a target
// order, compared with the closed formula.
OracleLine order_oracle(const Params& group, std::uint64_t seed);

}  // namespace cosetlab::scenarios
