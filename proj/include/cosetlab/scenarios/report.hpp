#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cosetlab::scenarios {

using nlohmann::json;

struct CapSettings {
    std::size_t class_cap = 5'000'000;
    std::size_t total_cap = 20'000'000;
    std::size_t memory_cap = std::size_t{4} << 30;
    friend bool operator==(const CapSettings&, const CapSettings&) = default;
};

struct CheckResult {
    std::string kind;
    json expected;
    json actual;
    // Present on failure: the offending elements in the group's encoding.
    std::optional<json> witness;
    std::string status;  // PASS, WARN, FAIL
    std::string reason;  // for FAIL: "assertion", "cap_exceeded: ..." or "error: ..."
    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct Report {
    std::string id;
    std::string outcome;  // PASS, FAIL, SKIPPED(GatedDataMissing)
    std::string group;
    std::string detail;   // why a scenario was skipped
    std::vector<CheckResult> checks;
    double wall_ms = 0;
    std::uint64_t seed = 0;
    CapSettings caps;

    bool passed() const { return outcome == "PASS"; }
    bool skipped() const { return outcome.rfind("SKIPPED", 0) == 0; }
    friend bool operator==(const Report&, const Report&) = default;
};

json to_json(const CheckResult& c);
json to_json(const Report& r);
Report report_from_json(const json& j);

// {"reports": [...]}; with_timing = false drops wall_ms so runs compare byte for byte.
std::string serialize_reports(const std::vector<Report>& reports, bool with_timing = true);
std::vector<Report> parse_reports(const std::string& text);

}  // namespace cosetlab::scenarios
