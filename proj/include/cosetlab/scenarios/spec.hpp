#pragma once

#include <string>
#include <vector>

#include "cosetlab/params.hpp"
#include "cosetlab/scenarios/config.hpp"

namespace cosetlab::scenarios {

struct ElementSpec {
    std::string name;
    std::string kind;
    Params params;
    friend bool operator==(const ElementSpec&, const ElementSpec&) = default;
};

struct CheckSpec {
    std::string kind;
    Params params;
    friend bool operator==(const CheckSpec&, const CheckSpec&) = default;
};

// File layout:
//   id = "..."            topic = "..."        requires = "file1 file2"
//   [group]               name = "GOplus", n = 8, q = 2 (or file = "...", order = N)
//   [elements.<name>]     kind = "...", constructor parameters
//   [[checks]]            kind = "...", check parameters
struct ScenarioSpec {
    std::string id;
    std::string topic;
    Params group;
    std::vector<ElementSpec> elements;
    std::vector<CheckSpec> checks;
    std::vector<std::string> gating;  // required data files

    bool gated() const { return !gating.empty(); }
    const ElementSpec* element(const std::string& name) const;
    friend bool operator==(const ScenarioSpec&, const ScenarioSpec&) = default;
};

std::vector<std::string> check_kinds();
std::vector<std::string> element_kinds();

// Element names referenced by a check parameter value: a comma separated list;
// entries starting with '@' are class selectors and are skipped.
std::vector<std::string> element_refs(const std::string& value);

// Throws ParseError with line numbers for schema violations.
ScenarioSpec parse_scenario(const std::string& text);
std::string serialize_scenario(const ScenarioSpec& spec);
// Structural checks shared by the parser and the built-in catalog.
void validate(const ScenarioSpec& spec);

// A built-in id, or a path to a scenario file.
ScenarioSpec load_scenario(const std::string& path_or_id);

}  // namespace cosetlab::scenarios
