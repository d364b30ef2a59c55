#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cosetlab/params.hpp"
#include "cosetlab/scenarios/spec.hpp"

namespace cosetlab::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSkipped = 3;

// "kind" or "kind:key=val,key=val". Integer values become integers, values
// with ';' become integer lists, anything else stays a string.
scenarios::ElementSpec parse_element_spec(const std::string& text, const std::string& name);

// Runs one command line. Output goes to out, diagnostics to err.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int dispatch(int argc, char** argv);

}  // namespace cosetlab::cli
