#pragma once

#include <map>
#include <vector>

#include "wick/context.hpp"

namespace wick {

/// Normally ordered product of normal forms; result in normal form.
/// Right-nested convention: words associate as :f1 (f2 (... fm)):.
VAExpr nprod(const Context& ctx, const VAExpr& a, const VAExpr& b);

/// The translation operator; an even derivation of nprod.
VAExpr derive(const Context& ctx, const VAExpr& a);
/// del^n / n! applied to a.
VAExpr derive_divided(const Context& ctx, const VAExpr& a, int n);

/// Full lambda-bracket, extended from the generator table by sesquilinearity
/// and the non-commutative Wick formulas on both arguments.
LambdaPoly lambda_bracket(const Context& ctx, const VAExpr& a, const VAExpr& b);

/// Coefficient of lambda^n/n! in [a_lambda b].
VAExpr nth_product(const Context& ctx, const VAExpr& a, const VAExpr& b, int n);

/// Rebuild an arbitrary (unsorted) word into normal form.
VAExpr normalize_word(const Context& ctx, const std::vector<Factor>& word);

/// P(-lambda - del), with del acting on the coefficients; the substitution
/// appearing in the skew-symmetry law.
LambdaPoly sub_minus_lambda_del(const Context& ctx, const LambdaPoly& p);

/// [a_lambda [b_mu c]] etc. for the conformal Jacobi test: coefficients of
/// lambda^(n) mu^(m).
using Lambda2Poly = std::vector<std::vector<VAExpr>>;
Lambda2Poly jacobi_residual(const Context& ctx, const VAExpr& a, const VAExpr& b,
                            const VAExpr& c);

/// Differential-algebra substitution on free generators: each monomial is
/// re-evaluated in dst with gen -> image (identity for unmapped generators,
/// which must then be valid in dst). Images must match parities.
VAExpr substitute(const Context& src, const Context& dst, const VAExpr& a,
                  const std::map<Generator, VAExpr>& images);

/// Charge and conformal weight of expressions; BadArgument when not
/// homogeneous (zero is homogeneous of any charge/weight).
int charge_of(const Context& ctx, const VAExpr& a);
Rational weight_of(const Context& ctx, const VAExpr& a);
int parity_of(const Context& ctx, const VAExpr& a);
bool is_weight_homogeneous(const Context& ctx, const VAExpr& a);

/// Raw expression trees (ingestion surface for tests and the CLI).
struct RawExpr {
  enum class Op { Gen, Vacuum, Sum, Scale, Der, NProd };
  Op op = Op::Vacuum;
  Generator gen{};
  Scalar factor = Scalar(1);
  std::vector<RawExpr> kids;

  static RawExpr generator(Generator g);
  static RawExpr vacuum();
  static RawExpr sum(std::vector<RawExpr> xs);
  static RawExpr scale(Scalar c, RawExpr x);
  static RawExpr der(RawExpr x);
  static RawExpr prod(RawExpr a, RawExpr b);
};

/// Evaluates the tree with the normal-form operations; linear, idempotent on
/// normal forms.
VAExpr normal_form(const Context& ctx, const RawExpr& e);

}  // namespace wick
