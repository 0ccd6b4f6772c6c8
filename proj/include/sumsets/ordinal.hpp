#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "sumsets/errors.hpp"

namespace sumsets {

/**
 * Basis index of the form w*q + s with finite q, s >= 0 (w the first limit
 * ordinal). Everything here lives below w^2; limit_part selects the stretch,
 * finite_part the offset inside it. Total order is lexicographic on
 * (limit_part, finite_part).
 */
struct Ordinal {
    int limit_part = 0;
    int finite_part = 0;

    friend auto operator<=>(const Ordinal&, const Ordinal&) = default;

    // Text form "q.s", e.g. e_5 -> "0.5" and e_{w+3} -> "1.3".
    std::string str() const {
        return std::to_string(limit_part) + "." + std::to_string(finite_part);
    }

    static Ordinal parse(std::string_view s) {
        auto bad = [&] { throw parse_error("malformed ordinal '" + std::string(s) + "'"); };
        auto dot = s.find('.');
        if (dot == std::string_view::npos)
            bad();
        auto to_int = [&](std::string_view t) {
            if (t.empty() || t.size() > 9)
                bad();
            int v = 0;
            for (char ch : t) {
                if (ch < '0' || ch > '9')
                    bad();
                v = v * 10 + (ch - '0');
            }
            return v;
        };
        return Ordinal{to_int(s.substr(0, dot)), to_int(s.substr(dot + 1))};
    }
};

// e_n for finite n: the ordinal n itself.
inline Ordinal basis_index(int n) { return Ordinal{0, n}; }

}  // namespace sumsets
