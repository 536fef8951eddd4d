#ifndef BOXWORLD_IO_HPP
#define BOXWORLD_IO_HPP

// JSON encodings of the library types. Rationals are always strings
// ("p/q" or "p"); state and map coordinates use the canonical-v1 basis
// (site-major, then measurement, then outcome, identity slot last).

#include "boxworld/bell.hpp"
#include "boxworld/transforms.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace boxworld {

using Json = nlohmann::ordered_json;

inline constexpr const char* kBasisName = "canonical-v1";

namespace detail {

inline std::string line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline Rational rational_field(const Json& j, const std::string& where) {
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw ParseError(where + ": expected a rational string like \"1/2\"");
}

inline std::vector<int> int_list(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array of integers");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer())
            throw ParseError(where + "[" + std::to_string(i) + "]: expected an integer");
        out.push_back(j[i].get<int>());
    }
    return out;
}

inline const Json& field(const Json& j, const char* name, const std::string& where) {
    if (!j.is_object()) throw ParseError(where + ": expected an object");
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(where + ": missing field \"" + name + "\"");
    return *it;
}

}  // namespace detail

inline Json parse_json_text(const std::string& text, const std::string& source = "input") {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(source + ": malformed JSON at " + detail::line_col(text, e.byte ? e.byte - 1 : 0));
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Json read_json_file(const std::string& path) { return parse_json_text(read_file(path), path); }

// --- SystemSpec: {"sites":[{"outcomes":[2,2]}, ...]} -----------------------

inline Json to_json(const SystemSpec& sys) {
    Json sites = Json::array();
    for (const auto& s : sys.sites()) sites.push_back(Json{{"outcomes", s.outcome_counts()}});
    return Json{{"sites", sites}};
}

inline SystemSpec system_from_json(const Json& j) {
    if (j.is_object() && j.contains("basis") && j["basis"] != kBasisName)
        throw ParseError("system.basis: unsupported basis " + j["basis"].dump());
    const Json& sites = detail::field(j, "sites", "system");
    if (!sites.is_array() || sites.empty()) throw ParseError("sites: expected a non-empty array");
    std::vector<SiteSpec> out;
    for (std::size_t i = 0; i < sites.size(); ++i) {
        const std::string where = "sites[" + std::to_string(i) + "]";
        auto outcomes = detail::int_list(detail::field(sites[i], "outcomes", where), where + ".outcomes");
        if (outcomes.empty()) throw ParseError(where + ".outcomes: M < 1 (need at least one measurement)");
        for (std::size_t m = 0; m < outcomes.size(); ++m)
            if (outcomes[m] < 2)
                throw ParseError(where + ".outcomes[" + std::to_string(m) + "]: K(m) = " +
                                 std::to_string(outcomes[m]) + " < 2");
        out.emplace_back(outcomes);
    }
    return SystemSpec(std::move(out));
}

// --- StateVector: {"basis":"canonical-v1","values":["p/q",...]} -----------

inline Json to_json(const StateVector& s) {
    Json values = Json::array();
    for (const auto& v : s.values) values.push_back(to_string(v));
    return Json{{"basis", kBasisName}, {"values", values}};
}

inline StateVector state_from_json(const Json& j) {
    if (j.is_object() && j.contains("basis") && j["basis"] != kBasisName)
        throw ParseError("state.basis: unsupported basis " + j["basis"].dump());
    const Json& values = detail::field(j, "values", "state");
    if (!values.is_array()) throw ParseError("state.values: expected an array");
    StateVector s;
    for (std::size_t i = 0; i < values.size(); ++i)
        s.values.push_back(detail::rational_field(values[i], "state.values[" + std::to_string(i) + "]"));
    return s;
}

// --- ProbabilityTable: [{"settings":[..],"outcomes":[..],"p":"1/2"}, ...] --

inline Json to_json(const ProbabilityTable& t) {
    Json out = Json::array();
    for (const auto& [key, p] : t.entries)
        out.push_back(Json{{"settings", key.settings}, {"outcomes", key.outcomes}, {"p", to_string(p)}});
    return out;
}

namespace detail {
template <class Fn>
void read_entries(const Json& j, const char* value_field, const char* what, Fn&& fn) {
    const Json* list = &j;
    if (j.is_object()) list = &field(j, "entries", what);
    if (!list->is_array()) throw ParseError(std::string(what) + ": expected an array of entries");
    for (std::size_t i = 0; i < list->size(); ++i) {
        const std::string where = std::string(what) + "[" + std::to_string(i) + "]";
        const Json& e = (*list)[i];
        auto settings = int_list(field(e, "settings", where), where + ".settings");
        auto outcomes = int_list(field(e, "outcomes", where), where + ".outcomes");
        if (settings.size() != outcomes.size())
            throw ParseError(where + ": settings and outcomes have different lengths");
        fn(settings, outcomes, rational_field(field(e, value_field, where), where + "." + value_field));
    }
}
}  // namespace detail

inline ProbabilityTable table_from_json(const Json& j) {
    ProbabilityTable t;
    detail::read_entries(j, "p", "table", [&](auto& m, auto& k, Rational p) {
        if (t.entries.count(TableKey{m, k})) throw ParseError("table: duplicate entry " + describe_context(m, k));
        t.set(m, k, std::move(p));
    });
    return t;
}

// --- BellFunctional: same entry layout with "c" ---------------------------

inline Json to_json(const BellFunctional& f) {
    Json out = Json::array();
    for (const auto& [key, c] : f.coefficients)
        out.push_back(Json{{"settings", key.settings}, {"outcomes", key.outcomes}, {"c", to_string(c)}});
    return out;
}

inline BellFunctional functional_from_json(const Json& j) {
    BellFunctional f;
    detail::read_entries(j, "c", "functional", [&](auto& m, auto& k, Rational c) { f.set(m, k, std::move(c)); });
    return f;
}

// --- LinearMap: {"basis":"canonical-v1","matrix":[["p/q",...],...]} ------

inline Json to_json(const LinearMap& t) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < t.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < t.dim(); ++j) row.push_back(to_string(t.matrix()(i, j)));
        rows.push_back(row);
    }
    return Json{{"basis", kBasisName}, {"matrix", rows}};
}

inline LinearMap map_from_json(const Json& j) {
    if (j.contains("basis") && j["basis"] != kBasisName)
        throw ParseError("map.basis: unsupported basis " + j["basis"].dump());
    const Json& rows = detail::field(j, "matrix", "map");
    if (!rows.is_array() || rows.empty()) throw ParseError("map.matrix: expected a non-empty array of rows");
    RMatrix m(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array() || rows[i].size() != rows.size())
            throw ParseError("map.matrix[" + std::to_string(i) + "]: expected a row of length " +
                             std::to_string(rows.size()));
        for (std::size_t c = 0; c < rows.size(); ++c)
            m(i, c) = detail::rational_field(rows[i][c],
                                             "map.matrix[" + std::to_string(i) + "][" + std::to_string(c) + "]");
    }
    return LinearMap(std::move(m));
}

}  // namespace boxworld

#endif  // BOXWORLD_IO_HPP
