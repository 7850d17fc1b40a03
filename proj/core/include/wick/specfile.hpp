#pragma once

#include <string>

#include "wick/brst.hpp"

namespace wick {

/// Algebra-spec files: UTF-8 JSON with exact-rational strings. The identity
/// element field, when present, switches the datum into gl(n|n) mode.
std::string algebra_to_spec(const SuperAlgebra& alg);
SuperAlgebra algebra_from_spec(const std::string& text);  // ParseError on bad input

SuperAlgebra load_algebra(const std::string& path);
void save_algebra(const SuperAlgebra& alg, const std::string& path);

/// load = parse + validate + full datum construction (ValidationError
/// delegates the structural diagnostics).
Datum load_datum(const std::string& path);
void save_datum(const Datum& dt, const std::string& path);

}  // namespace wick
