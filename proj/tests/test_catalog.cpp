#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "wick/catalog.hpp"
#include "wick/error.hpp"
#include "wick/report.hpp"
#include "wick/specfile.hpp"

using namespace wick;

TEST_CASE("builtin data exist and unknown names are rejected") {
  CHECK(builtin_names().size() == 7);
  for (const auto& name : builtin_names()) {
    Datum dt = builtin_datum(name);
    CHECK(dt.name == name);
    CHECK(dt.cent.good);
    CHECK(dt.cent.iso_half);
  }
  CHECK_THROWS_AS(builtin_datum("e8-principal"), Error);
}

TEST_CASE("grading shapes of selected entries") {
  SUBCASE("sl2-principal has one-dimensional pieces at 1, 0, -1") {
    Datum dt = builtin_datum("sl2-principal");
    REQUIRE(dt.grading.levels.size() == 3);
    for (const auto& [deg, idx] : dt.grading.levels) CHECK(idx.size() == 1);
  }
  SUBCASE("sl3-minimal has dimensions 1,2,2,2,1 and rho_{>0} = 2x") {
    Datum dt = builtin_datum("sl3-minimal");
    std::vector<size_t> dims;
    for (const auto& [deg, idx] : dt.grading.levels) dims.push_back(idx.size());
    CHECK(dims == std::vector<size_t>{1, 2, 2, 2, 1});
    CHECK(dt.rho.rho_pos == vec_scale(dt.alg->x, Rational(2)));
  }
  SUBCASE("osp12-principal grades the odd part by half-integers") {
    Datum dt = builtin_datum("osp12-principal");
    for (size_t i = 0; i < dt.alg->dim(); ++i) {
      if (dt.alg->parity[i]) {
        CHECK(!dt.grading.deg[i].is_integer());
        CHECK(dt.grading.deg[i].abs() == Rational(1, 2));
      } else {
        CHECK(dt.grading.deg[i].is_integer());
      }
    }
  }
  SUBCASE("the minimal entries satisfy rho_{>0} = (hvee - 1) x") {
    for (const char* name : {"sl3-minimal", "sl4-minimal", "sl21-minimal"}) {
      Datum dt = builtin_datum(name);
      Rational hv = dt.hvee();
      CHECK(dt.rho.rho_pos == vec_scale(dt.alg->x, hv - Rational(1)));
    }
  }
}

TEST_CASE("algebra-spec files") {
  SUBCASE("save/load round-trips every builtin algebra exactly") {
    for (const auto& name : builtin_names()) {
      SuperAlgebra g = builtin_algebra(name);
      std::string text = algebra_to_spec(g);
      SuperAlgebra h = algebra_from_spec(text);
      CHECK(h.name == g.name);
      CHECK(h.basis == g.basis);
      CHECK(h.parity == g.parity);
      CHECK(h.form == g.form);
      CHECK(h.brk == g.brk);
      CHECK(h.x == g.x);
      CHECK(h.f == g.f);
      CHECK(h.identity_element == g.identity_element);
      // emit . parse is the identity on canonical files
      CHECK(algebra_to_spec(h) == text);
    }
  }
  SUBCASE("file ingestion builds a working datum with the right mode") {
    std::string path = "/tmp/wick_sl3min.json";
    save_algebra(builtin_algebra("sl3-minimal"), path);
    Datum dt = load_datum(path);
    CHECK(dt.mode == Mode::Standard);
    CHECK(check_d_squared(dt).ok);
    std::remove(path.c_str());

    path = "/tmp/wick_gl22.json";
    save_algebra(builtin_algebra("gl22-principal"), path);
    Datum dt2 = load_datum(path);
    CHECK(dt2.mode == Mode::GlNN);
    std::remove(path.c_str());
  }
  SUBCASE("a non-invariant form is rejected with the offending triple") {
    SuperAlgebra g = builtin_algebra("sl2-principal");
    g.brk[0][2] = vec_scale(g.basis_vec(1), Rational(2));  // [e,f] = 2h
    g.brk[2][0] = vec_scale(g.basis_vec(1), Rational(-2));
    std::string path = "/tmp/wick_bad_form.json";
    save_algebra(g, path);
    CHECK_THROWS_WITH_AS(load_datum(path), doctest::Contains("invariance"), Error);
    std::remove(path.c_str());
  }
  SUBCASE("an odd-odd form entry violating supersymmetry is rejected") {
    SuperAlgebra g = builtin_algebra("osp12-principal");
    size_t p = static_cast<size_t>(g.index_of("psip")), m = static_cast<size_t>(g.index_of("psim"));
    g.form.at(p, m) = g.form.at(m, p);  // should be skew on odd pairs
    std::string path = "/tmp/wick_bad_susy.json";
    save_algebra(g, path);
    CHECK_THROWS_WITH_AS(load_datum(path), doctest::Contains("supersymmetric"), Error);
    std::remove(path.c_str());
  }
  SUBCASE("parse errors carry context") {
    CHECK_THROWS_AS(algebra_from_spec("{ not json"), Error);
    CHECK_THROWS_AS(algebra_from_spec("{\"name\":\"x\"}"), Error);
    CHECK_THROWS_AS(algebra_from_spec(
                        "{\"name\":\"x\",\"basis\":[{\"name\":\"a\",\"parity\":0}],"
                        "\"x\":[\"1/0\"],\"f\":[\"0\"]}"),
                    Error);
  }
}

TEST_CASE("rendering") {
  Datum dt = builtin_datum("sl2-principal");
  const Context& cx = dt.ctx;
  SUBCASE("the dressed Cartan current prints in the standard notation") {
    VAExpr jh = J_current(dt, dt.alg->basis_vec(1));
    CHECK(render_expr(cx, jh) == "h + 2:φ_e φ^e:");
  }
  SUBCASE("vacuum and zero") {
    CHECK(render_expr(cx, cx.vacuum()) == "1");
    CHECK(render_expr(cx, VAExpr::zero()) == "0");
  }
  SUBCASE("negative non-constant coefficients are parenthesized") {
    VAExpr e = cx.vacuum(Scalar(PolyK::parse("-2*k - 2")));
    CHECK(render_expr(cx, e) == "-(2*k + 2)");
  }
  SUBCASE("lambda polynomials") {
    LambdaPoly p = lambda_bracket(cx, cx.current(0), cx.current(2));
    CHECK(render_lambda(cx, p) == "h + k*λ");
  }
  SUBCASE("latex output uses the standard macros") {
    VAExpr jh = J_current(dt, dt.alg->basis_vec(1));
    std::string s = render_expr(cx, jh, Format::Latex);
    CHECK(s.find("\\varphi_{e}") != std::string::npos);
    CHECK(s.find("\\varphi^{e}") != std::string::npos);
  }
}

TEST_CASE("reports") {
  Datum dt = builtin_datum("sl2-principal");
  SUBCASE("verified claims serialize as expected") {
    Report rep = run_claims(dt, {"thm3.1"}, 0, 1);
    CHECK(rep.all_ok());
    std::string js = report_to_json(rep);
    CHECK(js.find("\"claim\": \"thm3.1\"") != std::string::npos);
    CHECK(js.find("\"status\": \"verified\"") != std::string::npos);
    CHECK(js.find("wall_ms") == std::string::npos);
  }
  SUBCASE("reports are byte-identical across runs and worker counts") {
    Report a = run_claims(dt, {"all"}, 42, 1);
    Report b = run_claims(dt, {"all"}, 42, 3);
    CHECK(report_to_json(a) == report_to_json(b));
  }
  SUBCASE("inapplicable claims are input errors") {
    Datum gl = builtin_datum("gl22-principal");
    CHECK_THROWS_AS(run_claims(gl, {"cor3.1"}, 0, 1), Error);
    CHECK_THROWS_AS(run_claims(dt, {"nonsense"}, 0, 1), Error);
  }
  SUBCASE("latex report is a standalone document") {
    Report rep = run_claims(dt, {"check"}, 0, 1);
    std::string tex = report_to_latex(rep);
    CHECK(tex.rfind("\\documentclass", 0) == 0);
    CHECK(tex.find("\\end{document}") != std::string::npos);
  }
}
