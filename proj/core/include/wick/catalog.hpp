#pragma once

#include "wick/brst.hpp"

namespace wick {

/// Built-in data: sl2-principal, sl3-principal, sl3-minimal, sl4-minimal,
/// osp12-principal, sl21-minimal, gl22-principal. UnknownDatum otherwise.
std::vector<std::string> builtin_names();
bool is_builtin(const std::string& name);
SuperAlgebra builtin_algebra(const std::string& name);
Datum builtin_datum(const std::string& name);

}  // namespace wick
