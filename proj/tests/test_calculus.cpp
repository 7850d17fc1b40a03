#include <doctest.h>

#include "wick/brst.hpp"
#include "wick/catalog.hpp"
#include "wick/error.hpp"

using namespace wick;

namespace {

Generator cur(const Datum& dt, const std::string& nm) {
  return {GenKind::Current, static_cast<uint16_t>(dt.alg->index_of(nm))};
}
Generator phi_g(const Datum& dt, const std::string& nm) {
  return {GenKind::PhiLower, static_cast<uint16_t>(dt.alg->index_of(nm))};
}
Generator phiup_g(const Datum& dt, const std::string& nm) {
  return {GenKind::PhiUpper, static_cast<uint16_t>(dt.alg->index_of(nm))};
}
VAExpr gen_expr(Generator g) { return VAExpr::term(Monomial::single(g), Scalar(1)); }

}  // namespace

TEST_CASE("quasi-commutativity: :f e: = :e f: - del h in the sl2 current algebra") {
  Datum dt = builtin_datum("sl2-principal");
  const Context& cx = dt.ctx;
  VAExpr e = cx.current(0), h = cx.current(1), f = cx.current(2);
  VAExpr fe = nprod(cx, f, e);
  VAExpr want = nprod(cx, e, f) - derive(cx, h);
  CHECK(fe == want);
}

TEST_CASE("triple contraction correction matches the charged-pair pattern") {
  Datum dt = builtin_datum("sl2-principal");
  const Context& cx = dt.ctx;
  size_t ie = 0;
  VAExpr lhs = nprod(cx, nprod(cx, cx.phi(ie), cx.phi_up(ie)), cx.phi(ie));
  VAExpr rhs = nprod(cx, cx.phi(ie), nprod(cx, cx.phi_up(ie), cx.phi(ie))) + derive(cx, cx.phi(ie));
  CHECK(lhs == rhs);
}

TEST_CASE("the vacuum is a unit for the normally ordered product") {
  Datum dt = builtin_datum("sl3-minimal");
  const Context& cx = dt.ctx;
  VAExpr a = J_current(dt, dt.alg->basis_vec(3));
  CHECK(nprod(cx, cx.vacuum(), a) == a);
  CHECK(nprod(cx, a, cx.vacuum()) == a);
  CHECK(derive(cx, cx.vacuum()).is_zero());
}

TEST_CASE("generator brackets of the sl2 complex") {
  Datum dt = builtin_datum("sl2-principal");
  const Context& cx = dt.ctx;
  VAExpr e = cx.current(0), h = cx.current(1), f = cx.current(2);

  SUBCASE("[e_lambda f] = h + lambda k") {
    LambdaPoly p = lambda_bracket(cx, e, f);
    CHECK(p.degree() == 1);
    CHECK(p.coeff(0) == h);
    CHECK(p.coeff(1) == VAExpr::vacuum(Scalar::k()));
  }
  SUBCASE("[phi_e lambda phi^e] = 1") {
    LambdaPoly p = lambda_bracket(cx, cx.phi(0), cx.phi_up(0));
    CHECK(p.degree() == 0);
    CHECK(p.coeff(0) == cx.vacuum());
  }
  SUBCASE("[h_lambda :e e:] = 4 :e e:") {
    VAExpr ee = nprod(cx, e, e);
    LambdaPoly p = lambda_bracket(cx, h, ee);
    CHECK(p.degree() == 0);
    CHECK(p.coeff(0) == ee * Scalar(Rational(4)));
  }
  SUBCASE("first product of e and f is the level") {
    CHECK(nth_product(cx, e, f, 1) == VAExpr::vacuum(Scalar::k()));
    CHECK(nth_product(cx, e, f, 99).is_zero());
  }
}

TEST_CASE("derivation law for the translation operator") {
  Datum dt = builtin_datum("sl2-principal");
  const Context& cx = dt.ctx;
  VAExpr e = cx.current(0), f = cx.current(2);
  VAExpr lhs = derive(cx, nprod(cx, e, f));
  VAExpr rhs = nprod(cx, derive(cx, e), f) + nprod(cx, e, derive(cx, f));
  CHECK(lhs == rhs);
}

TEST_CASE("normal_form on raw trees is linear and idempotent") {
  Datum dt = builtin_datum("sl3-minimal");
  const Context& cx = dt.ctx;
  Generator ge = cur(dt, "e13"), gh = cur(dt, "h1");
  RawExpr tree = RawExpr::prod(
      RawExpr::der(RawExpr::generator(gh)),
      RawExpr::sum({RawExpr::generator(ge),
                    RawExpr::scale(Scalar(Rational(2)), RawExpr::generator(gh))}));
  VAExpr nf = normal_form(cx, tree);
  CHECK(!nf.is_zero());
  // idempotence: rebuilding each monomial word reproduces the expression
  VAExpr rebuilt;
  for (const auto& [m, c] : nf.terms()) rebuilt += normalize_word(cx, m.factors()) * c;
  CHECK(rebuilt == nf);
  // linearity against the split tree
  VAExpr part1 = normal_form(cx, RawExpr::prod(RawExpr::der(RawExpr::generator(gh)),
                                               RawExpr::generator(ge)));
  VAExpr part2 = normal_form(cx, RawExpr::prod(RawExpr::der(RawExpr::generator(gh)),
                                               RawExpr::generator(gh)));
  CHECK(nf == part1 + part2 * Scalar(Rational(2)));
}

TEST_CASE("substitution") {
  Datum dt = builtin_datum("sl2-principal");
  const Context& cx = dt.ctx;
  Generator ge = cur(dt, "e"), gf = cur(dt, "f");
  VAExpr ef = nprod(cx, gen_expr(ge), gen_expr(gf));

  SUBCASE("killing a generator kills its products") {
    std::map<Generator, VAExpr> images{{ge, VAExpr::zero()}};
    CHECK(substitute(cx, cx, ef, images).is_zero());
  }
  SUBCASE("the empty substitution is the identity") {
    CHECK(substitute(cx, cx, ef, {}) == ef);
  }
  SUBCASE("parity mismatches are rejected") {
    std::map<Generator, VAExpr> images{{ge, cx.phi(0)}};
    CHECK_THROWS_AS(substitute(cx, cx, ef, images), Error);
  }
}

TEST_CASE("charge and conformal weight") {
  Datum dt = builtin_datum("sl3-minimal");
  const Context& cx = dt.ctx;
  SUBCASE("charge counts charged fermions with sign") {
    VAExpr m = nprod(cx, cx.phi(static_cast<size_t>(dt.alg->index_of("e13"))),
                     cx.current(static_cast<size_t>(dt.alg->index_of("h1"))));
    CHECK(charge_of(cx, m) == 1);
    CHECK(charge_of(cx, dt.d) == -1);
  }
  SUBCASE("neutral fermions have weight 1/2") {
    VAExpr phi = cx.neutral(dt.grading.half[0]);
    CHECK(weight_of(cx, phi) == Rational(1, 2));
  }
  SUBCASE("derivatives add one") {
    VAExpr dh = derive(cx, cx.current(static_cast<size_t>(dt.alg->index_of("h1"))));
    CHECK(weight_of(cx, dh) == Rational(2));
  }
  SUBCASE("additivity over factors") {
    VAExpr m = nprod(cx, cx.phi_up(static_cast<size_t>(dt.alg->index_of("e12"))),
                     derive(cx, cx.neutral(dt.grading.half[0])));
    // phi^{e12} has weight m_j = 1/2, del Phi has 3/2
    CHECK(weight_of(cx, m) == Rational(2));
    CHECK(charge_of(cx, m) == -1);
  }
}

TEST_CASE("skew-symmetry on mixed composite pairs") {
  Datum dt = builtin_datum("sl21-minimal");
  const Context& cx = dt.ctx;
  VAExpr a = nprod(cx, cx.phi(static_cast<size_t>(dt.alg->index_of("e13"))),
                   cx.neutral(dt.grading.half[0]));
  VAExpr b = nprod(cx, cx.current(static_cast<size_t>(dt.alg->index_of("h1"))),
                   cx.phi_up(static_cast<size_t>(dt.alg->index_of("e13"))));
  LambdaPoly ab = lambda_bracket(cx, a, b);
  LambdaPoly ba = sub_minus_lambda_del(cx, lambda_bracket(cx, b, a));
  int sgn = (parity_of(cx, a) && parity_of(cx, b)) ? 1 : -1;
  CHECK((ab + ba * Scalar(Rational(-sgn))).is_zero());
}

TEST_CASE("lambda-calculus soundness suites per datum") {
  for (const char* name : {"sl2-principal", "sl3-minimal", "sl21-minimal", "osp12-principal"}) {
    Datum dt = builtin_datum(name);
    CheckResult r = verify_lambda_soundness(dt, 20250811, 40);
    INFO(name, ": ", r.note);
    CHECK(r.ok);
  }
}

TEST_CASE("quasi-associativity contraction identities on a fermionic datum") {
  Datum dt = builtin_datum("sl21-minimal");
  for (const char* id : {"5.6", "5.7", "5.8"}) {
    CheckResult r = verify_identity(dt, id);
    INFO(id, ": ", r.note);
    CHECK(r.ok);
  }
}
