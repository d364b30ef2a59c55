#pragma once

#include <string>
#include <vector>

#include "cosetlab/params.hpp"

namespace cosetlab::scenarios {

// A flat TOML subset: key = value pairs under [table] and [[array]] headers.
// Values are integers, double-quoted strings or integer lists; '#' starts a
// comment outside strings. Dotted headers such as [elements.tv] are kept as
// one name.
struct ConfigSection {
    std::string name;  // empty for the keys before the first header
    bool array = false;
    std::size_t line = 0;
    Params values;
    std::vector<std::string> order;  // keys in file order
    std::vector<std::size_t> lines;

    std::size_t line_of(const std::string& key) const;
};

struct ConfigDoc {
    std::vector<ConfigSection> sections;

    const ConfigSection* find(const std::string& name) const;
    std::vector<const ConfigSection*> all(const std::string& name) const;
};

ConfigDoc parse_config(const std::string& text);
std::string serialize_config(const ConfigDoc& doc);

std::string quote(const std::string& s);

}  // namespace cosetlab::scenarios
