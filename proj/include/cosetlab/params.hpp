#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cosetlab/error.hpp"

namespace cosetlab {

// Scenario values are restricted to integers, integer lists and strings.
using ParamValue = std::variant<long long, std::vector<long long>, std::string>;

class Params {
public:
    Params() = default;
    Params(std::initializer_list<std::pair<const std::string, ParamValue>> init) : values_(init) {}

    bool has(const std::string& k) const { return values_.count(k) != 0; }
    void set(const std::string& k, ParamValue v) { values_[k] = std::move(v); }
    const std::map<std::string, ParamValue>& values() const { return values_; }

    long long get_int(const std::string& k) const {
        auto it = values_.find(k);
        if (it == values_.end()) throw Error("missing parameter '" + k + "'");
        if (auto p = std::get_if<long long>(&it->second)) return *p;
        throw Error("parameter '" + k + "' must be an integer");
    }
    long long get_int(const std::string& k, long long dflt) const { return has(k) ? get_int(k) : dflt; }

    std::vector<long long> get_list(const std::string& k) const {
        auto it = values_.find(k);
        if (it == values_.end()) throw Error("missing parameter '" + k + "'");
        if (auto p = std::get_if<std::vector<long long>>(&it->second)) return *p;
        if (auto p = std::get_if<long long>(&it->second)) return {*p};
        throw Error("parameter '" + k + "' must be an integer list");
    }

    std::string get_string(const std::string& k) const {
        auto it = values_.find(k);
        if (it == values_.end()) throw Error("missing parameter '" + k + "'");
        if (auto p = std::get_if<std::string>(&it->second)) return *p;
        throw Error("parameter '" + k + "' must be a string");
    }
    std::string get_string(const std::string& k, const std::string& dflt) const {
        return has(k) ? get_string(k) : dflt;
    }

    friend bool operator==(const Params&, const Params&) = default;

private:
    std::map<std::string, ParamValue> values_;
};

}  // namespace cosetlab
