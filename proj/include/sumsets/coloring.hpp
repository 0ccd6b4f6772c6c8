#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include <json.hpp>

#include "sumsets/errors.hpp"
#include "sumsets/hashing.hpp"
#include "sumsets/pattern.hpp"
#include "sumsets/vector.hpp"

namespace sumsets {

enum class ColoringKind {
    pattern_table,   // explicit pattern -> color table, default for the rest
    seeded_hash,     // color of the canonical vector encoding under a seed
    pattern_seeded,  // color of the pattern encoding under a seed
};

inline const char* to_string(ColoringKind k) {
    switch (k) {
        case ColoringKind::pattern_table: return "pattern_table";
        case ColoringKind::seeded_hash: return "seeded_hash";
        case ColoringKind::pattern_seeded: return "pattern_seeded";
    }
    return "?";
}

/**
 * A finite coloring of the vector space, in one of three shapes. The two
 * pattern_* kinds are pattern-determined by construction: the color of x
 * depends only on pattern(x). seeded_hash colors the vector itself, so equal
 * patterns may still split -- that is the case the homogeneous-set reduction
 * exists for.
 */
struct ColoringSpec {
    int k = 1;
    ColoringKind kind = ColoringKind::pattern_table;
    std::map<Pattern, int> entries;  // pattern_table only
    std::uint64_t seed = 0;          // seeded kinds only
    int default_color = 0;

    static ColoringSpec table(int k, std::map<Pattern, int> entries, int default_color = 0) {
        ColoringSpec s;
        s.k = k;
        s.kind = ColoringKind::pattern_table;
        s.entries = std::move(entries);
        s.default_color = default_color;
        s.validate();
        return s;
    }

    static ColoringSpec seeded(ColoringKind kind, int k, std::uint64_t seed) {
        ColoringSpec s;
        s.k = k;
        s.kind = kind;
        s.seed = seed;
        s.validate();
        return s;
    }

    static ColoringSpec constant(int k) { return table(k, {}, 0); }

    bool pattern_determined() const { return kind != ColoringKind::seeded_hash; }

    void validate() const {
        if (k < 1)
            throw parse_error("coloring field 'k' must be >= 1");
        if (default_color < 0 || default_color >= k)
            throw parse_error("coloring field 'default_color' out of [0,k)");
        for (const auto& [p, c] : entries)
            if (c < 0 || c >= k)
                throw parse_error("coloring entry for pattern '" + p.str() +
                                  "' has color out of [0,k)");
    }
};

// Color of a pattern under a pattern-determined spec.
inline int color_pattern(const ColoringSpec& c, const Pattern& p) {
    switch (c.kind) {
        case ColoringKind::pattern_table: {
            auto it = c.entries.find(p);
            return it == c.entries.end() ? c.default_color : it->second;
        }
        case ColoringKind::pattern_seeded:
            return seeded_text_color(c.seed, c.k, p.str());
        case ColoringKind::seeded_hash:
            throw std::domain_error("seeded_hash coloring is not pattern-determined");
    }
    throw std::logic_error("unreachable coloring kind");
}

inline int color_vector(const ColoringSpec& c, const Vector& x) {
    if (c.kind == ColoringKind::seeded_hash)
        return seeded_text_color(c.seed, c.k, x.encode());
    return color_pattern(c, pattern(x));  // rejects the zero vector
}

// ---- JSON form (the coloring spec file format) ----
//
// { "k": 2, "kind": "pattern_table", "default_color": 0, "seed": 0,
//   "entries": [ { "pattern": ["1/1","1/1"], "color": 0 }, ... ] }

inline nlohmann::ordered_json pattern_to_json(const Pattern& p) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& e : p.entries())
        arr.push_back(e.str());
    return arr;
}

inline Pattern pattern_from_json(const nlohmann::json& j, const std::string& field) {
    if (!j.is_array() || j.empty())
        throw parse_error("field '" + field + "' must be a nonempty array of fraction strings");
    std::vector<Rational> entries;
    for (const auto& e : j) {
        if (!e.is_string())
            throw parse_error("field '" + field + "' must contain fraction strings");
        entries.push_back(Rational::parse(e.get<std::string>()));
    }
    return Pattern(std::move(entries));
}

inline nlohmann::ordered_json coloring_to_json(const ColoringSpec& c) {
    nlohmann::ordered_json j;
    j["k"] = c.k;
    j["kind"] = to_string(c.kind);
    if (c.kind == ColoringKind::pattern_table) {
        j["default_color"] = c.default_color;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& [p, col] : c.entries) {
            nlohmann::ordered_json e;
            e["pattern"] = pattern_to_json(p);
            e["color"] = col;
            arr.push_back(std::move(e));
        }
        j["entries"] = std::move(arr);
    } else {
        j["seed"] = c.seed;
    }
    return j;
}

inline ColoringSpec coloring_from_json(const nlohmann::json& j) {
    ColoringSpec c;
    if (!j.is_object())
        throw parse_error("coloring spec must be a JSON object");
    if (!j.contains("k") || !j["k"].is_number_integer())
        throw parse_error("coloring field 'k' missing or not an integer");
    c.k = j["k"].get<int>();
    if (!j.contains("kind") || !j["kind"].is_string())
        throw parse_error("coloring field 'kind' missing or not a string");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "pattern_table")
        c.kind = ColoringKind::pattern_table;
    else if (kind == "seeded_hash")
        c.kind = ColoringKind::seeded_hash;
    else if (kind == "pattern_seeded")
        c.kind = ColoringKind::pattern_seeded;
    else
        throw parse_error("coloring field 'kind' has unknown value '" + kind + "'");

    if (c.kind == ColoringKind::pattern_table) {
        if (j.contains("default_color")) {
            if (!j["default_color"].is_number_integer())
                throw parse_error("coloring field 'default_color' must be an integer");
            c.default_color = j["default_color"].get<int>();
        }
        if (j.contains("entries")) {
            if (!j["entries"].is_array())
                throw parse_error("coloring field 'entries' must be an array");
            for (const auto& e : j["entries"]) {
                if (!e.is_object() || !e.contains("pattern") || !e.contains("color") ||
                    !e["color"].is_number_integer())
                    throw parse_error("coloring field 'entries' items need 'pattern' and integer 'color'");
                c.entries.emplace(pattern_from_json(e["pattern"], "entries.pattern"),
                                  e["color"].get<int>());
            }
        }
    } else {
        if (!j.contains("seed") || !j["seed"].is_number())
            throw parse_error("coloring field 'seed' missing for seeded kind");
        c.seed = j["seed"].get<std::uint64_t>();
    }
    c.validate();
    return c;
}

}  // namespace sumsets
