#include "cosetlab/scenarios/report.hpp"

#include "cosetlab/error.hpp"

namespace cosetlab::scenarios {

json to_json(const CheckResult& c) {
    json j{{"kind", c.kind}, {"expected", c.expected}, {"actual", c.actual}, {"status", c.status}};
    if (c.witness) j["witness"] = *c.witness;
    if (!c.reason.empty()) j["reason"] = c.reason;
    return j;
}

json to_json(const Report& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    json j{{"id", r.id},
           {"outcome", r.outcome},
           {"group", r.group},
           {"checks", checks},
           {"wall_ms", r.wall_ms},
           {"seed", r.seed},
           {"caps", {{"class", r.caps.class_cap}, {"total", r.caps.total_cap}, {"memory", r.caps.memory_cap}}}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

Report report_from_json(const json& j) {
    try {
        Report r;
        r.id = j.at("id").get<std::string>();
        r.outcome = j.at("outcome").get<std::string>();
        r.group = j.value("group", "");
        r.detail = j.value("detail", "");
        r.wall_ms = j.value("wall_ms", 0.0);
        r.seed = j.at("seed").get<std::uint64_t>();
        const auto& caps = j.at("caps");
        r.caps.class_cap = caps.at("class").get<std::size_t>();
        r.caps.total_cap = caps.at("total").get<std::size_t>();
        r.caps.memory_cap = caps.at("memory").get<std::size_t>();
        for (const auto& c : j.at("checks")) {
            CheckResult cr;
            cr.kind = c.at("kind").get<std::string>();
            cr.expected = c.at("expected");
            cr.actual = c.at("actual");
            cr.status = c.at("status").get<std::string>();
            if (c.contains("witness")) cr.witness = c.at("witness");
            cr.reason = c.value("reason", "");
            r.checks.push_back(std::move(cr));
        }
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("report does not match the schema: ") + e.what(), 0);
    }
}

std::string serialize_reports(const std::vector<Report>& reports, bool with_timing) {
    json arr = json::array();
    for (const auto& r : reports) {
        json j = to_json(r);
        if (!with_timing) j.erase("wall_ms");
        arr.push_back(std::move(j));
    }
    return json{{"reports", arr}}.dump(2) + "\n";
}

std::vector<Report> parse_reports(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid report document: ") + e.what(), 0);
    }
    if (!j.contains("reports") || !j["reports"].is_array()) throw ParseError("report document lacks 'reports'", 0);
    std::vector<Report> out;
    for (const auto& r : j["reports"]) out.push_back(report_from_json(r));
    return out;
}

}  // namespace cosetlab::scenarios
