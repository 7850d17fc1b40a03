#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wick/calculus.hpp"

namespace wick {

enum class Mode { Standard, GlNN };

/// Outcome of a symbolic zero-test: ok iff the residual vanished identically.
struct CheckResult {
  bool ok = true;
  std::string note;
  VAExpr residual;

  static CheckResult pass() { return {}; }
  static CheckResult expr(VAExpr r, std::string what);
  static CheckResult lambda(const LambdaPoly& r, std::string what);
  CheckResult& merge(const CheckResult& o);
};

/// A validated datum with everything the constructions need: grading, dual
/// bases, centralizer, Casimir, rho-vectors, the main complex context and the
/// differential element d. Immutable; verification functions are pure.
struct Datum {
  std::string name;
  Mode mode = Mode::Standard;
  std::shared_ptr<const SuperAlgebra> alg;
  Grading grading;
  DualBases duals;
  CentralizerData cent;
  CasimirResult casimir;
  RhoData rho;
  Omega0Data om0;
  Context ctx;
  Context ffr_ctx;  // currents on g_0 with the shifted current form, no charged fermions
  VAExpr d;
  std::vector<std::pair<std::string, Vec>> gf0;      // labeled basis of g^f_0
  std::vector<std::pair<std::string, Vec>> gf_half;  // labeled basis of g^f_{-1/2}

  Rational hvee() const;   // 0 in gl(n|n) mode; BadArgument if Casimir non-scalar
  Scalar level_shift() const;  // k + hvee, or k in gl(n|n) mode
  const Vec* centralizer_element(const std::string& label) const;
};

struct MakeOptions {
  Mode mode = Mode::Standard;
  bool run_validate = true;
};

/// Errors: ValidationError (axioms or iso_half fail), FNotDegreeMinusOne,
/// NotHomogeneous/NotHalfInteger from the grading.
Datum make_datum(SuperAlgebra alg, const MakeOptions& opts = {});

// --- named elements ----------------------------------------------------

VAExpr build_d(const Datum& dt);  // recomputes; dt.d is the cached copy
VAExpr apply_d0(const Datum& dt, const VAExpr& a);

/// Dressed current J^{(v)}; linear in v.
VAExpr J_current(const Datum& dt, const Vec& v);
/// Closed element J^{a} for a in g^f_0 (NotInCentralizer otherwise).
VAExpr J_hat0(const Datum& dt, const Vec& a);
/// Closed element J^{v} for v in g^f_{-1/2} (NotInCentralizer otherwise).
VAExpr J_half(const Datum& dt, const Vec& v);
/// The distinguished weight-2 closed element; in gl(n|n) mode the modified
/// one with the -:I^2:/2k counterterm.
VAExpr J_f(const Datum& dt);

struct Virasoro {
  VAExpr L, Lg, Lch, Lne;
};
Virasoro L_total(const Datum& dt);

VAExpr witness1(const Datum& dt);
VAExpr witness2(const Datum& dt);

// closed forms of the differential on generators and on dressed currents
VAExpr d0_generator_direct(const Datum& dt, Generator g);
VAExpr d0_neutral_dual_direct(const Datum& dt, size_t half_pos);
VAExpr d0_dressed_current_direct(const Datum& dt, const Vec& v);

// --- verification ------------------------------------------------------

CheckResult check_d_squared(const Datum& dt);
CheckResult verify_d0_closed_forms(const Datum& dt);
CheckResult verify_thm31(const Datum& dt);
CheckResult verify_thm32(const Datum& dt);

RatFunK central_charge_formula(const Datum& dt);  // needs rho
RatFunK central_charge_ope(const Datum& dt);      // lambda^3 extraction
CheckResult verify_central_charge(const Datum& dt);

CheckResult verify_ope_current(const Datum& dt);  // dressed currents, deg_i * deg_j >= 0
CheckResult verify_ope_gf0(const Datum& dt);      // J^{a} family and its level form
CheckResult verify_ope_mixed(const Datum& dt);    // J^{a} against J^{v}

// --- free-field realization ---------------------------------------------

/// Rewrites a in terms of the dressed currents J^{(v)}, v of degree <= 0, and
/// the neutral fermions; Current factors in the result mean J^{(u_i)}.
/// NotInBarSubalgebra if a is not in that subalgebra.
VAExpr to_bar(const Datum& dt, const VAExpr& a);
/// The free-field image: kills J^{(v)} for v of negative degree, keeps the
/// rest; lands in dt.ffr_ctx.
VAExpr ffr(const Datum& dt, const VAExpr& a);

VAExpr ffr_image_jhat0(const Datum& dt, const Vec& a);   // displayed image
VAExpr ffr_image_jhalf(const Datum& dt, const Vec& v);   // displayed image
VAExpr ffr_image_L(const Datum& dt);                     // displayed image
CheckResult verify_cor31(const Datum& dt);

// --- identity catalog ----------------------------------------------------

std::vector<std::string> identity_catalog(const Datum& dt);
CheckResult verify_identity(const Datum& dt, const std::string& id, uint64_t seed = 0);

namespace detail {
/// The purely quadratic charged-fermion residual of the exactness chain;
/// identically zero for every datum satisfying the half-isomorphism condition.
VAExpr exactness_residual(const Datum& dt);
}  // namespace detail

/// Randomized lambda-calculus soundness: skew-symmetry, conformal Jacobi,
/// sesquilinearity, Wick consistency, quasi-associativity contractions.
CheckResult verify_lambda_soundness(const Datum& dt, uint64_t seed, int samples = 100);

}  // namespace wick
