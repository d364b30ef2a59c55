#include "cosetlab/cli/emit.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "cosetlab/error.hpp"

namespace cosetlab::cli {

using scenarios::Report;

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "json" || s == "structured") return Format::structured;
    throw Error("unknown format '" + s + "' (text or json)");
}

std::string format_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (width.size() <= i) width.push_back(0);
            width[i] = std::max(width[i], r[i].size());
        }
    std::ostringstream out;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
        }
        out << line << '\n';
    }
    return out.str();
}

namespace {

std::string ms(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0f", v);
    return buf;
}

std::string text(const std::vector<Report>& reports) {
    std::vector<std::vector<std::string>> rows{{"scenario", "group", "outcome", "checks", "ms"}};
    std::size_t pass = 0, fail = 0, skip = 0;
    for (const auto& r : reports) {
        auto ok = std::count_if(r.checks.begin(), r.checks.end(), [](const auto& c) { return c.status != "FAIL"; });
        rows.push_back({r.id, r.group, r.outcome, std::to_string(ok) + "/" + std::to_string(r.checks.size()), ms(r.wall_ms)});
        if (r.passed()) ++pass;
        else if (r.skipped()) ++skip;
        else ++fail;
    }
    std::ostringstream out;
    if (!reports.empty()) out << format_table(rows);
    for (const auto& r : reports) {
        if (!r.detail.empty() && !r.skipped()) out << "\n" << r.id << ": " << r.detail << "\n";
        for (const auto& c : r.checks) {
            if (c.status == "PASS") continue;
            out << "\n" << r.id << " / " << c.kind << ": " << c.status;
            if (!c.reason.empty()) out << " (" << c.reason << ")";
            out << "\n  expected: " << c.expected.dump() << "\n  actual:   " << c.actual.dump() << "\n";
            if (c.witness) out << "  witness:  " << c.witness->dump() << "\n";
        }
    }
    out << (reports.empty() ? "" : "\n") << reports.size() << " scenarios: " << pass << " passed, " << fail
        << " failed, " << skip << " skipped\n";
    if (!reports.empty()) {
        const auto& c = reports.front().caps;
        out << "seed " << reports.front().seed << ", caps class=" << c.class_cap << " total=" << c.total_cap
            << " memory=" << c.memory_cap << "\n";
    }
    return out.str();
}

}  // namespace

std::string emit_report(const std::vector<Report>& reports, Format format) {
    if (format == Format::structured) return scenarios::serialize_reports(reports) + "\n";
    return text(reports);
}

int exit_code(const std::vector<Report>& reports, bool strict) {
    bool fail = false, skip = false;
    for (const auto& r : reports) {
        fail = fail || (!r.passed() && !r.skipped());
        skip = skip || r.skipped();
    }
    if (fail) return 1;
    if (strict && skip) return 3;
    return 0;
}

}  // namespace cosetlab::cli
