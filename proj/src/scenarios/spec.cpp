#include "cosetlab/scenarios/spec.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "cosetlab/error.hpp"
#include "cosetlab/mat/elements.hpp"
#include "cosetlab/scenarios/catalog.hpp"

namespace cosetlab::scenarios {

namespace {

// Parameters that name elements of the scenario.
const char* const kRefParams[] = {"c", "d", "x", "y", "target", "subgroup", "except"};

bool contains(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

void check_refs(const ScenarioSpec& spec, const CheckSpec& c, std::size_t line) {
    for (const char* key : kRefParams) {
        if (!c.params.has(key)) continue;
        std::string v = c.params.get_string(key);
        for (auto& r : element_refs(v)) {
            // "except" holds pairs "a:b"
            std::stringstream ss(r);
            std::string part;
            while (std::getline(ss, part, ':'))
                if (!spec.element(part))
                    throw ParseError("check '" + c.kind + "' references undefined element '" + part + "'", line);
        }
    }
}

}  // namespace

const ElementSpec* ScenarioSpec::element(const std::string& name) const {
    for (const auto& e : elements)
        if (e.name == name) return &e;
    return nullptr;
}

std::vector<std::string> check_kinds() {
    return {"product_orders_subset", "all_p_elements",           "orbit_count_eq",   "orbit_lengths_eq",
            "class_rows_leq",        "contains_non_p_element",   "common_flag_for_all_witnesses",
            "jordan_census_eq",      "class_count_monotone_in_q", "class_size_eq",    "group_order_eq"};
}

std::vector<std::string> element_kinds() {
    auto k = mat::matrix_element_kinds();
    for (const char* extra : {"graph", "polarity", "swap", "pair", "generator", "slp"}) k.push_back(extra);
    return k;
}

std::vector<std::string> element_refs(const std::string& value) {
    std::vector<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(' ');
        auto e = item.find_last_not_of(' ');
        if (b == std::string::npos) continue;
        item = item.substr(b, e - b + 1);
        if (item[0] != '@') out.push_back(item);
    }
    return out;
}

void validate(const ScenarioSpec& spec) {
    if (spec.id.empty()) throw ParseError("missing required key 'id'", 0);
    if (!spec.group.has("name") && !spec.group.has("file")) throw ParseError("[group] needs 'name' or 'file'", 0);
    std::set<std::string> names;
    for (const auto& e : spec.elements) {
        if (!names.insert(e.name).second) throw ParseError("duplicate element '" + e.name + "'", 0);
        if (!contains(element_kinds(), e.kind))
            throw ParseError("element '" + e.name + "': unknown constructor kind '" + e.kind + "'", 0);
    }
    for (const auto& c : spec.checks) {
        if (!contains(check_kinds(), c.kind)) throw ParseError("unknown check kind '" + c.kind + "'", 0);
        check_refs(spec, c, 0);
    }
}

ScenarioSpec parse_scenario(const std::string& text) {
    ConfigDoc doc = parse_config(text);
    ScenarioSpec s;
    const ConfigSection& root = doc.sections.front();
    auto str = [](const ConfigSection& sec, const std::string& key) {
        try {
            return sec.values.get_string(key);
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(e.what(), sec.line_of(key));
        }
    };
    for (const auto& k : root.order)
        if (k != "id" && k != "topic" && k != "requires") throw ParseError("unknown top-level key '" + k + "'", root.line_of(k));
    if (!root.values.has("id")) throw ParseError("missing required key 'id'", 1);
    s.id = str(root, "id");
    if (root.values.has("topic")) s.topic = str(root, "topic");
    if (root.values.has("requires")) s.gating = split_ws(str(root, "requires"));

    const ConfigSection* group = doc.find("group");
    if (!group) throw ParseError("missing required key 'group' (a [group] section)", 0);
    if (group->array) throw ParseError("'group' must be a table, not an array", group->line);
    s.group = group->values;
    if (!s.group.has("name") && !s.group.has("file"))
        throw ParseError("[group] needs 'name' or 'file'", group->line);

    for (const auto& sec : doc.sections) {
        if (sec.name.empty() || sec.name == "group") continue;
        if (sec.name.rfind("elements.", 0) == 0 && !sec.array) {
            ElementSpec e;
            e.name = sec.name.substr(9);
            if (e.name.empty() || e.name.find('.') != std::string::npos || e.name.find(',') != std::string::npos)
                throw ParseError("invalid element name '" + e.name + "'", sec.line);
            if (!sec.values.has("kind")) throw ParseError("element '" + e.name + "' is missing 'kind'", sec.line);
            e.kind = str(sec, "kind");
            if (!contains(element_kinds(), e.kind))
                throw ParseError("element '" + e.name + "': unknown constructor kind '" + e.kind + "'",
                                 sec.line_of("kind"));
            for (const auto& [k, v] : sec.values.values())
                if (k != "kind") e.params.set(k, v);
            if (s.element(e.name)) throw ParseError("duplicate element '" + e.name + "'", sec.line);
            s.elements.push_back(std::move(e));
        } else if (sec.name == "checks" && sec.array) {
            CheckSpec c;
            if (!sec.values.has("kind")) throw ParseError("check is missing 'kind'", sec.line);
            c.kind = str(sec, "kind");
            if (!contains(check_kinds(), c.kind))
                throw ParseError("unknown check kind '" + c.kind + "'", sec.line_of("kind"));
            for (const auto& [k, v] : sec.values.values())
                if (k != "kind") c.params.set(k, v);
            s.checks.push_back(std::move(c));
        } else {
            throw ParseError("unknown section [" + sec.name + "]", sec.line);
        }
    }
    // references are checked once every element is known
    std::size_t ci = 0;
    for (const auto& sec : doc.sections)
        if (sec.name == "checks") check_refs(s, s.checks[ci++], sec.line);
    return s;
}

std::string serialize_scenario(const ScenarioSpec& spec) {
    ConfigDoc doc;
    ConfigSection root;
    root.values.set("id", spec.id);
    root.order.push_back("id");
    if (!spec.topic.empty()) {
        root.values.set("topic", spec.topic);
        root.order.push_back("topic");
    }
    if (!spec.gating.empty()) {
        std::string r;
        for (const auto& f : spec.gating) r += (r.empty() ? "" : " ") + f;
        root.values.set("requires", r);
        root.order.push_back("requires");
    }
    doc.sections.push_back(root);
    ConfigSection g;
    g.name = "group";
    g.values = spec.group;
    doc.sections.push_back(g);
    for (const auto& e : spec.elements) {
        ConfigSection sec;
        sec.name = "elements." + e.name;
        sec.values = e.params;
        sec.values.set("kind", e.kind);
        sec.order.push_back("kind");
        doc.sections.push_back(sec);
    }
    for (const auto& c : spec.checks) {
        ConfigSection sec;
        sec.name = "checks";
        sec.array = true;
        sec.values = c.params;
        sec.values.set("kind", c.kind);
        sec.order.push_back("kind");
        doc.sections.push_back(sec);
    }
    return serialize_config(doc);
}

ScenarioSpec load_scenario(const std::string& path_or_id) {
    for (const auto& s : builtin_catalog())
        if (s.id == path_or_id) return s;
    if (!std::filesystem::exists(path_or_id))
        throw Error("'" + path_or_id + "' is neither a built-in scenario id nor a file");
    std::ifstream in(path_or_id);
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_scenario(ss.str());
    } catch (const ParseError& e) {
        throw ParseError(path_or_id + ": " + e.what(), 0);
    }
}

}  // namespace cosetlab::scenarios
