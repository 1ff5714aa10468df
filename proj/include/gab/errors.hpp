#pragma once

#include <stdexcept>
#include <string>

namespace gab {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
};

struct singular_matrix : error {
    explicit singular_matrix(const std::string& what = "singular matrix") : error(what) {}
};

struct shape_mismatch : error {
    explicit shape_mismatch(const std::string& what) : error(what) {}
};

struct parse_error : error {
    parse_error(const std::string& what, std::size_t pos)
        : error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

// Termination guard for reduction loops. Order-decreasing rule sets cannot
// trip this; a throw indicates a malformed system, never silent truncation.
struct fuel_exhausted : error {
    fuel_exhausted() : error("reduction fuel exhausted; rule set is malformed") {}
};

struct precondition_failed : error {
    explicit precondition_failed(const std::string& what) : error(what) {}
};

struct not_confluent : error {
    explicit not_confluent(const std::string& what) : error(what) {}
};

} // namespace gab
