#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hyperint/quadratic.hpp"

namespace hyperint {

struct parse_error : std::runtime_error {
    std::size_t position;
    parse_error(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

/// Parses a comma-separated parameter list.  Grammar per term:
///   rational | rational "*sqrt(" integer ")"
///   | rational ("+"|"-") rational "*sqrt(" integer ")"
/// with rational := ["-"] digits ["/" digits] and optional whitespace.
/// Rejects mixed field discriminants, D = 1 or non-square-free D, and
/// entries that are nonpositive integers.
std::vector<QuadraticNumber> parse_parameters(std::string_view text);

/// Single rational, same syntax as a rational term.
Rational parse_rational(std::string_view text);

} // namespace hyperint
