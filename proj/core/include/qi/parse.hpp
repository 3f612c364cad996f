#pragma once

#include <stdexcept>
#include <string>

#include "qi/polynomial.hpp"

namespace qi {

struct ParseError : std::runtime_error {
    size_t offset;
    ParseError(const std::string& what, size_t off)
        : std::runtime_error(what + " at byte " + std::to_string(off)), offset(off) {}
};

// Grammar: integer/rational literals, ring variable names, + - * ^ and
// parentheses. '^' takes an integer exponent; negative exponents are allowed
// only in Laurent rings and only on monomial bases. Implicit multiplication
// is rejected ("t1t2" lexes as one unknown identifier).
Polynomial parse_poly(const std::string& text, const Ring& ring);
LaurentPolynomial parse_laurent(const std::string& text, const Ring& ring);

}  // namespace qi
