#pragma once

#include <stdexcept>
#include <string>

namespace qpd {

struct division_by_zero : std::domain_error {
    explicit division_by_zero(const std::string& what) : std::domain_error(what) {}
};

// Raised when a classical-limit substitution hits a vanishing denominator,
// e.g. the 2/h shift of the t-derivative.
struct pole_error : std::domain_error {
    explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

struct degenerate_alpha : std::domain_error {
    explicit degenerate_alpha(const std::string& what) : std::domain_error(what) {}
};

struct parse_error : std::runtime_error {
    parse_error(std::size_t pos, const std::string& what)
        : std::runtime_error(what), position(pos) {}
    std::size_t position;
};

} // namespace qpd
