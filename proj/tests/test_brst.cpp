#include <doctest.h>

#include "wick/catalog.hpp"
#include "wick/error.hpp"
#include "wick/specfile.hpp"

using namespace wick;

namespace {

size_t idx(const Datum& dt, const std::string& nm) {
  int i = dt.alg->index_of(nm);
  REQUIRE(i >= 0);
  return static_cast<size_t>(i);
}

}  // namespace

TEST_CASE("the differential of the sl2 complex is :e phi^e: + phi^e") {
  Datum dt = builtin_datum("sl2-principal");
  const Context& cx = dt.ctx;
  VAExpr want = nprod(cx, cx.current(0), cx.phi_up(0)) + cx.phi_up(0);
  CHECK(dt.d == want);
  CHECK(charge_of(cx, dt.d) == -1);
  CHECK(weight_of(cx, dt.d) == Rational(1));
}

TEST_CASE("the sl3-minimal differential carries the cubic charged term") {
  Datum dt = builtin_datum("sl3-minimal");
  CHECK(charge_of(dt.ctx, dt.d) == -1);
  CHECK(weight_of(dt.ctx, dt.d) == Rational(1));
  bool cubic = false;
  for (const auto& [m, c] : dt.d.terms())
    if (m.size() == 3 && m.count(GenKind::PhiUpper) == 2 && m.count(GenKind::PhiLower) == 1)
      cubic = true;
  CHECK(cubic);
}

TEST_CASE("d is independent of the basis presentation") {
  // rescale and reorder the degree-1/2 part of sl3-minimal
  Datum ref = builtin_datum("sl3-minimal");
  SuperAlgebra g = builtin_algebra("sl3-minimal");
  size_t a = idx(ref, "e12"), b = idx(ref, "e23");
  // new basis: u'_a = 3 u_b, u'_b = (1/2) u_a
  Mat T = Mat::identity(g.dim());  // new = T * old coordinates
  T.at(a, a) = Rational(0);
  T.at(b, b) = Rational(0);
  T.at(a, b) = Rational(3);
  T.at(b, a) = Rational(1, 2);
  auto tinv = T.inverse();
  REQUIRE(tinv);
  SuperAlgebra h = g;
  auto old_coords = [&](const Vec& newc) { return T.apply(newc); };
  for (size_t i = 0; i < g.dim(); ++i)
    for (size_t j = 0; j < g.dim(); ++j) {
      Vec br = g.bracket(old_coords(g.basis_vec(i)), old_coords(g.basis_vec(j)));
      h.brk[i][j] = tinv->apply(br);
      h.form.at(i, j) = g.pair(old_coords(g.basis_vec(i)), old_coords(g.basis_vec(j)));
    }
  h.x = tinv->apply(g.x);
  h.f = tinv->apply(g.f);
  Datum dt2 = make_datum(h, {});

  // map the primed generators back: currents by T, duals by the inverse
  std::map<Generator, VAExpr> images;
  const Context& cx = ref.ctx;
  images[{GenKind::Current, static_cast<uint16_t>(a)}] =
      cx.current(b) * Scalar(Rational(3));
  images[{GenKind::Current, static_cast<uint16_t>(b)}] =
      cx.current(a) * Scalar(Rational(1, 2));
  images[{GenKind::PhiLower, static_cast<uint16_t>(a)}] = cx.phi(b) * Scalar(Rational(3));
  images[{GenKind::PhiLower, static_cast<uint16_t>(b)}] = cx.phi(a) * Scalar(Rational(1, 2));
  images[{GenKind::PhiUpper, static_cast<uint16_t>(a)}] = cx.phi_up(b) * Scalar(Rational(1, 3));
  images[{GenKind::PhiUpper, static_cast<uint16_t>(b)}] = cx.phi_up(a) * Scalar(Rational(2));
  images[{GenKind::NeutralPhi, static_cast<uint16_t>(a)}] =
      cx.neutral(b) * Scalar(Rational(3));
  images[{GenKind::NeutralPhi, static_cast<uint16_t>(b)}] =
      cx.neutral(a) * Scalar(Rational(1, 2));
  CHECK(substitute(dt2.ctx, cx, dt2.d, images) == ref.d);
}

TEST_CASE("the differential acts on sl2 generators by the closed forms") {
  Datum dt = builtin_datum("sl2-principal");
  const Context& cx = dt.ctx;
  SUBCASE("on f") {
    VAExpr got = apply_d0(dt, cx.current(2));
    VAExpr want = nprod(cx, cx.phi_up(0), cx.current(1)) + derive(cx, cx.phi_up(0)) * Scalar::k();
    CHECK(got == want);
  }
  SUBCASE("on phi_e") {
    VAExpr got = apply_d0(dt, cx.phi(0));
    CHECK(got == cx.current(0) + cx.vacuum());
  }
  SUBCASE("on the vacuum") { CHECK(apply_d0(dt, cx.vacuum()).is_zero()); }
}

TEST_CASE("closed forms of the differential match on small data") {
  for (const char* name : {"sl2-principal", "sl3-minimal", "sl21-minimal", "osp12-principal"}) {
    Datum dt = builtin_datum(name);
    CheckResult r = verify_d0_closed_forms(dt);
    INFO(name, ": ", r.note);
    CHECK(r.ok);
  }
}

TEST_CASE("the differential squares to zero on small data") {
  for (const char* name : {"sl2-principal", "sl3-minimal", "osp12-principal"}) {
    Datum dt = builtin_datum(name);
    CheckResult r = check_d_squared(dt);
    INFO(name, ": ", r.note);
    CHECK(r.ok);
  }
}

TEST_CASE("a corrupted structure constant is caught, not silently passed") {
  SuperAlgebra g = builtin_algebra("sl3-minimal");
  // inject a spurious component into [e12, e13]
  size_t e12 = 1, e13 = 0;
  g.brk[e12][e13][e13] = Rational(1);
  MakeOptions opts;
  opts.run_validate = false;
  Datum dt = make_datum(std::move(g), opts);
  CheckResult d2 = check_d_squared(dt);
  CHECK(!d2.ok);
  CHECK(!d2.residual.is_zero());
}

TEST_CASE("dressed currents") {
  Datum dt = builtin_datum("sl2-principal");
  const Context& cx = dt.ctx;
  SUBCASE("the dressed h picks up 2 :phi_e phi^e:") {
    VAExpr want = cx.current(1) + nprod(cx, cx.phi(0), cx.phi_up(0)) * Scalar(Rational(2));
    CHECK(J_current(dt, dt.alg->basis_vec(1)) == want);
  }
  SUBCASE("the dressed f is bare") {
    CHECK(J_current(dt, dt.alg->basis_vec(2)) == cx.current(2));
  }
  SUBCASE("linear in the argument") {
    CHECK(J_current(dt, vec_zero(3)).is_zero());
    Vec v = vec_add(dt.alg->basis_vec(0), vec_scale(dt.alg->basis_vec(1), Rational(5)));
    CHECK(J_current(dt, v) ==
          J_current(dt, dt.alg->basis_vec(0)) + J_current(dt, dt.alg->basis_vec(1)) * Scalar(Rational(5)));
  }
}

TEST_CASE("closed elements of weight one and their level form") {
  Datum dt = builtin_datum("sl3-minimal");
  REQUIRE(dt.gf0.size() == 1);
  const Vec& a = dt.gf0[0].second;
  VAExpr ja = J_hat0(dt, a);
  SUBCASE("d0-closed") { CHECK(apply_d0(dt, ja).is_zero()); }
  SUBCASE("zero maps to zero, non-centralizing elements are rejected") {
    CHECK(J_hat0(dt, vec_zero(dt.alg->dim())).is_zero());
    CHECK_THROWS_AS(J_hat0(dt, dt.alg->basis_vec(idx(dt, "h1"))), Error);
  }
  SUBCASE("the level form differs from the current one by half the half-Killing form") {
    const SuperAlgebra& g = *dt.alg;
    Rational kap = killing(g, dt.grading, a, a, KillingSel::Full);
    Rational kap0 = killing(g, dt.grading, a, a, KillingSel::Degree, Rational(0));
    Rational kpos = killing(g, dt.grading, a, a, KillingSel::Pos);
    Rational khalf = killing(g, dt.grading, a, a, KillingSel::Degree, half());
    Scalar b0 = Scalar::k() * Scalar(g.pair(a, a)) + Scalar((kap - kap0) * half());
    Scalar bh = Scalar::k() * Scalar(g.pair(a, a)) + Scalar(kpos - khalf * half());
    CHECK(bh - b0 == Scalar(-khalf * half()));
    // and bh is what the bracket actually produces
    LambdaPoly p = lambda_bracket(dt.ctx, ja, ja);
    CHECK(p.coeff(1) == VAExpr::vacuum(bh));
  }
}

TEST_CASE("closed elements of weight three-halves") {
  Datum dt = builtin_datum("sl3-minimal");
  REQUIRE(dt.gf_half.size() == 2);
  for (const auto& [label, v] : dt.gf_half) {
    VAExpr jv = J_half(dt, v);
    INFO(label);
    CHECK(apply_d0(dt, jv).is_zero());
  }
  CHECK(J_half(dt, vec_zero(dt.alg->dim())).is_zero());
  CHECK_THROWS_AS(J_half(dt, dt.alg->basis_vec(idx(dt, "e13"))), Error);
  CHECK_THROWS_AS(J_half(dt, dt.alg->basis_vec(idx(dt, "h1"))), Error);
}

TEST_CASE("the weight-2 element of the sl2 complex in closed form") {
  Datum dt = builtin_datum("sl2-principal");
  const Context& cx = dt.ctx;
  VAExpr jh = J_current(dt, dt.alg->basis_vec(1));
  VAExpr want = cx.current(2) - nprod(cx, jh, jh) * Scalar(Rational(1, 4)) -
                derive(cx, jh) * Scalar(RatFunK(PolyK::parse("k + 1"), PolyK(Rational(2))));
  CHECK(J_f(dt) == want);
  CHECK(charge_of(cx, J_f(dt)) == 0);
  CHECK(weight_of(cx, J_f(dt)) == Rational(2));
}

TEST_CASE("the energy-momentum element of the sl2 complex") {
  Datum dt = builtin_datum("sl2-principal");
  const Context& cx = dt.ctx;
  Virasoro v = L_total(dt);
  VAExpr e = cx.current(0), h = cx.current(1), f = cx.current(2);
  Scalar c = Scalar(1) / (Scalar::k() + Scalar(2)) * Scalar(half());
  VAExpr lg = (nprod(cx, e, f) + nprod(cx, f, e) + nprod(cx, h, h) * Scalar(half())) * c;
  CHECK(v.Lg == lg);
  VAExpr lch = -nprod(cx, cx.phi_up(0), derive(cx, cx.phi(0)));
  CHECK(v.Lch == lch);
  CHECK(v.Lne.is_zero());
  CHECK(weight_of(cx, v.L) == Rational(2));
}

TEST_CASE("central charges") {
  SUBCASE("sl2-principal reproduces the rational-function value") {
    Datum dt = builtin_datum("sl2-principal");
    RatFunK want =
        RatFunK(1) - RatFunK(PolyK::parse("6*k^2 + 12*k + 6"), PolyK::parse("k + 2"));
    CHECK(central_charge_formula(dt) == want);
    CHECK(central_charge_ope(dt) == want);
    CHECK(want.eval(Rational(-1, 2)) == Rational(0));
  }
  SUBCASE("sl3-minimal: the closed formula equals the bracket extraction") {
    Datum dt = builtin_datum("sl3-minimal");
    CHECK(verify_central_charge(dt).ok);
  }
  SUBCASE("sl21-minimal: c = 3 - 6(k+1) from both routes") {
    Datum dt = builtin_datum("sl21-minimal");
    CHECK(central_charge_ope(dt) == RatFunK(PolyK::parse("-6*k - 3")));
    CHECK(verify_central_charge(dt).ok);
  }
}

TEST_CASE("main theorems on the small data") {
  for (const char* name : {"sl2-principal", "sl3-minimal", "sl21-minimal", "osp12-principal"}) {
    Datum dt = builtin_datum(name);
    CheckResult t31 = verify_thm31(dt);
    INFO(name, " closedness: ", t31.note);
    CHECK(t31.ok);
    CheckResult t32 = verify_thm32(dt);
    INFO(name, " exactness: ", t32.note);
    CHECK(t32.ok);
  }
}

TEST_CASE("free-field realization") {
  SUBCASE("negative dressed currents map to zero") {
    Datum dt = builtin_datum("sl3-minimal");
    CHECK(ffr(dt, J_current(dt, dt.alg->basis_vec(idx(dt, "e31")))).is_zero());
    CHECK(ffr(dt, J_current(dt, dt.alg->basis_vec(idx(dt, "e21")))).is_zero());
  }
  SUBCASE("positive currents and bare charged fermions are rejected") {
    Datum dt = builtin_datum("sl3-minimal");
    CHECK_THROWS_AS(ffr(dt, J_current(dt, dt.alg->basis_vec(idx(dt, "e13")))), Error);
    CHECK_THROWS_AS(ffr(dt, dt.ctx.phi(idx(dt, "e13"))), Error);
  }
  SUBCASE("sl2: the image of L") {
    Datum dt = builtin_datum("sl2-principal");
    const Context& fx = dt.ffr_ctx;
    VAExpr got = ffr(dt, J_f(dt)) * (-(Scalar(1) / dt.level_shift()));
    VAExpr h = fx.current(1);
    Scalar den = Scalar::k() + Scalar(2);
    VAExpr want = nprod(fx, h, h) * (Scalar(Rational(1, 4)) / den) +
                  derive(fx, h) * (RatFunK(PolyK::parse("k + 1"), PolyK(Rational(2))) / den);
    CHECK(got == want);
    CHECK(got == ffr_image_L(dt));
  }
  SUBCASE("the displayed images hold on the fermionic minimal data") {
    for (const char* name : {"sl3-minimal", "sl21-minimal"}) {
      Datum dt = builtin_datum(name);
      CheckResult r = verify_cor31(dt);
      INFO(name, ": ", r.note);
      CHECK(r.ok);
    }
  }
}

TEST_CASE("operator families") {
  for (const char* name : {"sl3-minimal", "sl21-minimal"}) {
    Datum dt = builtin_datum(name);
    CheckResult r = verify_ope_current(dt);
    INFO(name, " current family: ", r.note);
    CHECK(r.ok);
    r = verify_ope_gf0(dt);
    INFO(name, " weight-one family: ", r.note);
    CHECK(r.ok);
    r = verify_ope_mixed(dt);
    INFO(name, " mixed family: ", r.note);
    CHECK(r.ok);
  }
}

TEST_CASE("identity catalog on sl3-minimal") {
  Datum dt = builtin_datum("sl3-minimal");
  for (const std::string& id : identity_catalog(dt)) {
    if (id == "va.soundness") continue;  // covered in the calculus suite
    CheckResult r = verify_identity(dt, id, 1);
    INFO(id, ": ", r.note);
    CHECK(r.ok);
  }
  CHECK_THROWS_AS(verify_identity(dt, "no-such-id"), Error);
}

TEST_CASE("gl(2|2) mode") {
  Datum dt = builtin_datum("gl22-principal");
  CHECK(dt.mode == Mode::GlNN);
  CHECK(dt.hvee() == Rational(0));
  SUBCASE("its identities") {
    for (const char* id : {"8.2", "8.3", "8.4", "8.5", "8.7", "8.8"}) {
      CheckResult r = verify_identity(dt, id);
      INFO(id, ": ", r.note);
      CHECK(r.ok);
    }
  }
  SUBCASE("the modified element is closed and exact against the modified L") {
    CHECK(verify_thm31(dt).ok);
    CHECK(verify_thm32(dt).ok);
  }
  SUBCASE("the L^g self-bracket has no central term") {
    const Context& cx = dt.ctx;
    VAExpr lg = L_total(dt).Lg;
    LambdaPoly p = lambda_bracket(cx, lg, lg);
    CHECK(p.degree() <= 1);
  }
}
