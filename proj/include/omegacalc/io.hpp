#pragma once

#include "omegacalc/multipoly.hpp"

#include <optional>
#include <string>

namespace omegacalc {

// Canonical text format. Terms in descending graded-lex order:
//   3/2*x0^5 - x0^3*x1^2
// Coefficients are num/den (den omitted when 1); unit coefficients and unit
// exponents are omitted. Zero polynomial prints "0".
std::string to_string(const MultiPoly& p);
std::string to_string(const BinaryForm& f);

// Parse the text format. When `declared` is given, every variable must
// belong to it; otherwise varsets are inferred with arity = max component
// index + 1.
MultiPoly parse_poly(const std::string& text,
                     const std::optional<std::vector<VarSet>>& declared = std::nullopt);

// Binary-form shortcut: parses against the declared varset {x, 2}.
BinaryForm parse_binary_form(const std::string& text);

// JSON round-trip:
//   {"vars":[["x",2],["u",3]],"terms":[{"exp":[5,0,...],"num":"3","den":"2"},...]}
std::string poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const std::string& json_text);

} // namespace omegacalc
