#pragma once

#include <string>

#include "numfun/rational_function.hpp"

namespace numfun {

class ParseError : public Error {
public:
    using Error::Error;
};

/// Parses the expression grammar (see docs/grammar.md) into a rational
/// function over Q in the variable t.
QRatFunc parse_rational_function(const std::string& text);

/// As parse_rational_function but requires a polynomial result.
QPoly parse_polynomial(const std::string& text);

}  // namespace numfun
