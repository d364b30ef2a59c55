#pragma once

#include <string>
#include <vector>

#include "cosetlab/scenarios/spec.hpp"

namespace cosetlab::scenarios {

// Every built-in scenario, parsed from the embedded scenario files.
const std::vector<ScenarioSpec>& builtin_catalog();
// The embedded source text of one built-in scenario.
std::string builtin_source(const std::string& id);

}  // namespace cosetlab::scenarios
