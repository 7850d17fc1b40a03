#pragma once

#include <string>

#include "wick/context.hpp"

namespace wick {

enum class Format { Text, Json, Latex };

Format parse_format(const std::string& s);  // "text" | "json" | "latex"

/// Deterministic: monomials ordered by conformal weight, then canonically.
std::string render_expr(const Context& ctx, const VAExpr& e, Format f = Format::Text);
std::string render_lambda(const Context& ctx, const LambdaPoly& p, Format f = Format::Text);
std::string render_scalar(const Scalar& c, Format f = Format::Text);

}  // namespace wick
