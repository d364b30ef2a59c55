#pragma once

#include <string>
#include <vector>

#include "cosetlab/scenarios/report.hpp"

namespace cosetlab::cli {

enum class Format { text, structured };

Format parse_format(const std::string& s);

// Text: an aligned summary table, then one block per failing or warning check
// with its witness. Structured: the report schema as JSON.
std::string emit_report(const std::vector<scenarios::Report>& reports, Format format);

// Column-aligned rows; the first row is the header.
std::string format_table(const std::vector<std::vector<std::string>>& rows);

// 0 when nothing failed, 1 on any FAIL, 3 when strict and something was skipped.
int exit_code(const std::vector<scenarios::Report>& reports, bool strict);

}  // namespace cosetlab::cli
