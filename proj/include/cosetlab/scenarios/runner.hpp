#pragma once

#include <string>
#include <vector>

#include "cosetlab/kernels/exec.hpp"
#include "cosetlab/scenarios/groups.hpp"
#include "cosetlab/scenarios/report.hpp"
#include "cosetlab/scenarios/spec.hpp"

namespace cosetlab::scenarios {

struct RunOptions {
    std::uint64_t seed = 0;
    CapSettings caps;
    std::string data_dir = "data";
    std::string base_url;
    GroupCache* cache = nullptr;
    // Cross-check against brute force where the instance is small enough.
    bool oracle = false;
    // Treat WARN (rational splitting of an algebraic count) as FAIL.
    bool strict_warn = false;
    kernels::Exec exec = kernels::Exec::parallel;
};

// Never throws for scenario-level problems: missing data gives SKIPPED, cap
// exhaustion and construction errors give FAIL with a reason.
Report run_scenario(const ScenarioSpec& spec, const RunOptions& opt);

// Recomputes the property a FAIL witness claims to violate, from the encoded
// elements alone. True if the violation reproduces.
bool reverify_witness(const ScenarioSpec& spec, const CheckResult& check, const RunOptions& opt);

// Brute-force limits for the oracle cross-checks.
inline constexpr std::uint64_t kOracleGroupOrder = 5000;
inline constexpr std::uint64_t kOracleCount = 10000;

}  // namespace cosetlab::scenarios
