#pragma once

#include <stdexcept>
#include <string>

#include "eulersum/oracle.hpp"

namespace eulersum::sumspec {

/// Parse failure with the offending position in the input expression.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// A parsed sum: descriptor plus an exact prefactor (the (p-1)! of ST sums).
struct ParsedSum {
    oracle::SumDescriptor descriptor;
    Rational prefactor{1};
    std::string canonical;
};

/// Grammar:
///   S[<pi1>;<pi2>;p=<int>]    Euler sum, pi = comma list of base^exp, empty as 0
///   Sbar[<pi1>;<pi2>;p=<int>] barred variant (extra (-1)^{n-1})
///   K[m=<int>,k=<int>,r=<int>,type=zeta|L]   kernel sum over (n+r)(n+k)
///   ST[p=<int>,k=<int>]       (p-1)! sum S(n+1,p)/(n! n(n+k))
ParsedSum parse(const std::string& text);

}  // namespace eulersum::sumspec
