#pragma once

#include <stdexcept>
#include <string>

namespace sumsets {

// A bounded search ran out of room (basis prefix, word-length cap, ...).
// The caller chose the bound; failure is reported, never silently absorbed.
struct search_exhausted : std::runtime_error {
    explicit search_exhausted(const std::string& what) : std::runtime_error(what) {}
};

// An independent re-check of a certificate or report did not hold.
struct verification_error : std::runtime_error {
    explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file or flag value; message names the offending field.
struct parse_error : std::invalid_argument {
    explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace sumsets
