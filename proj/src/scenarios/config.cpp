#include "cosetlab/scenarios/config.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "cosetlab/error.hpp"

namespace cosetlab::scenarios {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Drops a trailing comment, ignoring '#' inside strings.
std::string strip_comment(const std::string& s) {
    bool in_str = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '\\' && in_str) {
            ++i;
        } else if (s[i] == '"') {
            in_str = !in_str;
        } else if (s[i] == '#' && !in_str) {
            return s.substr(0, i);
        }
    }
    return s;
}

bool valid_key(const std::string& k) {
    return !k.empty() && std::all_of(k.begin(), k.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
    });
}

long long parse_int(const std::string& s, std::size_t line) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError("expected an integer, got '" + s + "'", line);
}

ParamValue parse_value(const std::string& s, std::size_t line) {
    if (s.empty()) throw ParseError("missing value", line);
    if (s.front() == '"') {
        std::string out;
        std::size_t i = 1;
        for (; i < s.size() && s[i] != '"'; ++i) {
            if (s[i] == '\\' && i + 1 < s.size()) {
                char c = s[++i];
                out += c == 'n' ? '\n' : c == 't' ? '\t' : c;
            } else {
                out += s[i];
            }
        }
        if (i >= s.size()) throw ParseError("unterminated string", line);
        if (!trim(s.substr(i + 1)).empty()) throw ParseError("trailing characters after string", line);
        return out;
    }
    if (s.front() == '[') {
        if (s.back() != ']') throw ParseError("unterminated list", line);
        std::vector<long long> v;
        std::stringstream ss(s.substr(1, s.size() - 2));
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (item.empty()) {
                if (ss.eof()) break;  // trailing comma
                throw ParseError("empty list item", line);
            }
            v.push_back(parse_int(item, line));
        }
        return v;
    }
    return parse_int(s, line);
}

}  // namespace

std::size_t ConfigSection::line_of(const std::string& key) const {
    for (std::size_t i = 0; i < order.size(); ++i)
        if (order[i] == key) return lines[i];
    return line;
}

const ConfigSection* ConfigDoc::find(const std::string& name) const {
    for (const auto& s : sections)
        if (s.name == name) return &s;
    return nullptr;
}

std::vector<const ConfigSection*> ConfigDoc::all(const std::string& name) const {
    std::vector<const ConfigSection*> out;
    for (const auto& s : sections)
        if (s.name == name) out.push_back(&s);
    return out;
}

ConfigDoc parse_config(const std::string& text) {
    ConfigDoc doc;
    doc.sections.push_back(ConfigSection{});
    std::set<std::string> tables;
    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = trim(strip_comment(raw));
        if (s.empty()) continue;
        if (s.front() == '[') {
            bool array = s.rfind("[[", 0) == 0;
            std::size_t close = s.find(array ? "]]" : "]");
            if (close == std::string::npos || !trim(s.substr(close + (array ? 2 : 1))).empty())
                throw ParseError("malformed section header", line);
            std::string name = trim(s.substr(array ? 2 : 1, close - (array ? 2 : 1)));
            if (!valid_key(name)) throw ParseError("invalid section name '" + name + "'", line);
            if (!array && !tables.insert(name).second) throw ParseError("duplicate section [" + name + "]", line);
            ConfigSection sec;
            sec.name = name;
            sec.array = array;
            sec.line = line;
            doc.sections.push_back(std::move(sec));
            continue;
        }
        auto eq = s.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'key = value'", line);
        std::string key = trim(s.substr(0, eq));
        if (!valid_key(key)) throw ParseError("invalid key '" + key + "'", line);
        auto& sec = doc.sections.back();
        if (sec.values.has(key)) throw ParseError("duplicate key '" + key + "'", line);
        sec.values.set(key, parse_value(trim(s.substr(eq + 1)), line));
        sec.order.push_back(key);
        sec.lines.push_back(line);
    }
    return doc;
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out += c;
    }
    return out + "\"";
}

std::string serialize_config(const ConfigDoc& doc) {
    std::ostringstream os;
    bool first = true;
    for (const auto& sec : doc.sections) {
        if (sec.name.empty() && sec.order.empty()) continue;
        if (!first) os << '\n';
        first = false;
        if (!sec.name.empty()) os << (sec.array ? "[[" : "[") << sec.name << (sec.array ? "]]" : "]") << '\n';
        std::vector<std::string> keys = sec.order;
        for (const auto& [k, v] : sec.values.values())
            if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
        for (const auto& k : keys) {
            const auto& v = sec.values.values().at(k);
            os << k << " = ";
            if (auto i = std::get_if<long long>(&v)) {
                os << *i;
            } else if (auto l = std::get_if<std::vector<long long>>(&v)) {
                os << '[';
                for (std::size_t j = 0; j < l->size(); ++j) os << (j ? ", " : "") << (*l)[j];
                os << ']';
            } else {
                os << quote(std::get<std::string>(v));
            }
            os << '\n';
        }
    }
    return os.str();
}

}  // namespace cosetlab::scenarios
