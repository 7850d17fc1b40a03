#include <doctest.h>

#include <random>

#include "wick/catalog.hpp"
#include "wick/error.hpp"
#include "wick/superalgebra.hpp"

using namespace wick;

namespace {

Vec by_name(const SuperAlgebra& g, const std::string& nm) {
  int i = g.index_of(nm);
  REQUIRE(i >= 0);
  return g.basis_vec(static_cast<size_t>(i));
}

}  // namespace

TEST_CASE("sl2 with the trace form validates") {
  SuperAlgebra g = builtin_algebra("sl2-principal");
  ValidationReport rep = validate(g);
  CHECK(rep.ok);
  CHECK(g.pair(by_name(g, "h"), by_name(g, "h")) == Rational(2));  // (theta|theta) = 2
}

TEST_CASE("corrupting [e,f] to 2h breaks invariance with the expected values") {
  SuperAlgebra g = builtin_algebra("sl2-principal");
  size_t e = 0, h = 1, f = 2;
  g.brk[e][f] = vec_scale(by_name(g, "h"), Rational(2));
  g.brk[f][e] = vec_scale(by_name(g, "h"), Rational(-2));
  ValidationReport rep = validate(g);
  CHECK(!rep.ok);
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.find("invariance") != std::string::npos && v.find("= 4") != std::string::npos &&
        v.find("= 2") != std::string::npos)
      found = true;
  CHECK(found);
}

TEST_CASE("osp(1|2) passes validation including odd-odd Jacobi") {
  SuperAlgebra g = builtin_algebra("osp12-principal");
  CHECK(validate(g).ok);
  // brute force the graded Jacobi identity over all triples once more, by hand
  size_t n = g.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        Vec lhs = g.bracket(g.basis_vec(i), g.brk[j][k]);
        Vec r1 = g.bracket(g.brk[i][j], g.basis_vec(k));
        Vec r2 = g.bracket(g.basis_vec(j), g.brk[i][k]);
        if (g.parity[i] && g.parity[j]) r2 = vec_scale(r2, Rational(-1));
        CHECK(lhs == vec_add(r1, r2));
      }
}

TEST_CASE("gradings") {
  SUBCASE("sl2-principal has degrees 1, 0, -1") {
    SuperAlgebra g = builtin_algebra("sl2-principal");
    Grading gr = grade_by_x(g);
    CHECK(gr.deg == std::vector<Rational>{Rational(1), Rational(0), Rational(-1)});
  }
  SUBCASE("sl3-minimal has dimensions 1,2,2,2,1") {
    SuperAlgebra g = builtin_algebra("sl3-minimal");
    Grading gr = grade_by_x(g);
    std::vector<size_t> dims;
    for (const auto& [deg, idx] : gr.levels) dims.push_back(idx.size());
    CHECK(dims == std::vector<size_t>{1, 2, 2, 2, 1});
    CHECK(gr.half.size() == 2);
  }
  SUBCASE("x = 0 gives the degenerate grading") {
    SuperAlgebra g = builtin_algebra("sl3-minimal");
    g.x = vec_zero(g.dim());
    Grading gr = grade_by_x(g);
    CHECK(gr.pos.empty());
    for (const auto& d : gr.deg) CHECK(d == Rational(0));
  }
  SUBCASE("a non-eigenvector basis is rejected") {
    SuperAlgebra g = builtin_algebra("sl3-minimal");
    g.x = by_name(g, "e12");  // nilpotent, not semisimple on this basis
    CHECK_THROWS_AS(grade_by_x(g), Error);
  }
}

TEST_CASE("centralizer data") {
  SUBCASE("sl2-principal is good with vacuous half condition") {
    SuperAlgebra g = builtin_algebra("sl2-principal");
    Grading gr = grade_by_x(g);
    CentralizerData cd = check_datum(g, gr);
    CHECK(cd.good);
    CHECK(cd.iso_half);
    CHECK(cd.basis.size() == 1);  // just f
  }
  SUBCASE("sl3-minimal: good, iso, dim g^f = 4") {
    SuperAlgebra g = builtin_algebra("sl3-minimal");
    Grading gr = grade_by_x(g);
    CentralizerData cd = check_datum(g, gr);
    CHECK(cd.good);
    CHECK(cd.iso_half);
    CHECK(cd.basis.size() == 4);
    for (const auto& v : cd.basis) CHECK(vec_is_zero(g.bracket(g.f, v)));
  }
  SUBCASE("f = 0 is not good") {
    SuperAlgebra g = builtin_algebra("sl3-minimal");
    g.f = vec_zero(g.dim());
    Grading gr = grade_by_x(g);
    CentralizerData cd = check_datum(g, gr);
    CHECK(!cd.good);
    CHECK(!cd.iso_half);
    CHECK(cd.basis.size() == g.dim());
  }
  SUBCASE("f of wrong degree is rejected") {
    SuperAlgebra g = builtin_algebra("sl3-minimal");
    g.f = by_name(g, "e21");  // degree -1/2
    Grading gr = grade_by_x(g);
    CHECK_THROWS_AS(check_datum(g, gr), Error);
  }
}

TEST_CASE("dual bases") {
  SUBCASE("sl2: u^e = f, u^h = h/2, u^f = e") {
    SuperAlgebra g = builtin_algebra("sl2-principal");
    Grading gr = grade_by_x(g);
    DualBases db = dual_basis(g, gr);
    CHECK(db.dual[0] == by_name(g, "f"));
    CHECK(db.dual[1] == vec_scale(by_name(g, "h"), Rational(1, 2)));
    CHECK(db.dual[2] == by_name(g, "e"));
  }
  SUBCASE("pairing identities hold exactly on every catalog entry") {
    for (const auto& name : builtin_names()) {
      SuperAlgebra g = builtin_algebra(name);
      Grading gr = grade_by_x(g);
      DualBases db = dual_basis(g, gr);
      for (size_t i = 0; i < g.dim(); ++i)
        for (size_t j = 0; j < g.dim(); ++j)
          CHECK(g.pair(g.basis_vec(i), db.dual[j]) == Rational(i == j ? 1 : 0));
      for (size_t a = 0; a < gr.half.size(); ++a)
        for (size_t b = 0; b < gr.half.size(); ++b) {
          Rational got = g.pair(g.f, g.bracket(g.basis_vec(gr.half[a]), db.half_dual[b]));
          CHECK(got == Rational(a == b ? 1 : 0));
        }
    }
  }
  SUBCASE("sl3-minimal neutral pairing is a nonsingular skew 2x2 matrix") {
    SuperAlgebra g = builtin_algebra("sl3-minimal");
    Grading gr = grade_by_x(g);
    Mat gram(2, 2);
    for (size_t a = 0; a < 2; ++a)
      for (size_t b = 0; b < 2; ++b)
        gram.at(a, b) =
            g.pair(g.f, g.bracket(g.basis_vec(gr.half[a]), g.basis_vec(gr.half[b])));
    CHECK(gram.at(0, 0) == Rational(0));
    CHECK(gram.at(1, 1) == Rational(0));
    CHECK(gram.at(0, 1) == -gram.at(1, 0));
    CHECK(gram.rank() == 2);
  }
  SUBCASE("a datum violating the half condition reports a singular Gram matrix") {
    SuperAlgebra g = builtin_algebra("sl3-minimal");
    g.f = vec_zero(g.dim());
    Grading gr = grade_by_x(g);
    CHECK_THROWS_AS(dual_basis(g, gr), Error);
  }
}

TEST_CASE("killing forms") {
  SuperAlgebra g = builtin_algebra("sl2-principal");
  Grading gr = grade_by_x(g);
  Vec h = by_name(g, "h");
  CHECK(killing(g, gr, h, h, KillingSel::Full) == Rational(8));
  CHECK(killing(g, gr, h, h, KillingSel::Degree, Rational(0)) == Rational(0));
  CHECK(killing(g, gr, h, h, KillingSel::Pos) == Rational(4));

  // trace decomposition on every catalog entry, all basis pairs
  for (const auto& name : builtin_names()) {
    SuperAlgebra a = builtin_algebra(name);
    Grading agr = grade_by_x(a);
    for (size_t i = 0; i < a.dim(); ++i)
      for (size_t j = 0; j < a.dim(); ++j) {
        Vec u = a.basis_vec(i), v = a.basis_vec(j);
        Rational total(0);
        for (const auto& [deg, idx] : agr.levels)
          total += killing(a, agr, u, v, KillingSel::Degree, deg);
        CHECK(total == killing(a, agr, u, v, KillingSel::Full));
      }
  }
}

TEST_CASE("dual Coxeter numbers") {
  auto hv = [](const std::string& name) {
    SuperAlgebra g = builtin_algebra(name);
    Grading gr = grade_by_x(g);
    DualBases db = dual_basis(g, gr);
    return dual_coxeter(g, db);
  };
  CHECK(hv("sl2-principal").hvee == Rational(2));
  CHECK(hv("sl3-minimal").hvee == Rational(3));
  CHECK(hv("sl3-principal").hvee == Rational(3));
  CHECK(hv("sl4-minimal").hvee == Rational(4));
  CHECK(hv("osp12-principal").hvee == Rational(3, 2));
  CHECK(hv("sl21-minimal").hvee == Rational(1));

  SUBCASE("gl(2|2) has a non-scalar Casimir acting as -2(a|I)I") {
    SuperAlgebra g = builtin_algebra("gl22-principal");
    Grading gr = grade_by_x(g);
    DualBases db = dual_basis(g, gr);
    CasimirResult cr = dual_coxeter(g, db);
    CHECK(!cr.hvee.has_value());
    const Vec& I = *g.identity_element;
    for (size_t i = 0; i < g.dim(); ++i) {
      Vec got = cr.omega.apply(g.basis_vec(i));
      Vec want = vec_scale(I, Rational(-2) * g.pair(g.basis_vec(i), I));
      CHECK(got == want);
    }
  }
  SUBCASE("kappa = 2 hvee (.|.) on all pairs of the simple entries") {
    for (const auto& name : builtin_names()) {
      if (name == "gl22-principal") continue;
      SuperAlgebra g = builtin_algebra(name);
      Grading gr = grade_by_x(g);
      DualBases db = dual_basis(g, gr);
      Rational two_hv = *dual_coxeter(g, db).hvee * Rational(2);
      for (size_t i = 0; i < g.dim(); ++i)
        for (size_t j = 0; j < g.dim(); ++j)
          CHECK(killing(g, gr, g.basis_vec(i), g.basis_vec(j), KillingSel::Full) ==
                two_hv * g.form.at(i, j));
    }
  }
}

TEST_CASE("rho vectors") {
  SUBCASE("sl2-principal: rho_{>0} = h/2 = x") {
    SuperAlgebra g = builtin_algebra("sl2-principal");
    Grading gr = grade_by_x(g);
    DualBases db = dual_basis(g, gr);
    RhoData rd = rho_vectors(g, gr, db, true);
    CHECK(rd.rho_pos == g.x);
    REQUIRE(rd.rho.has_value());
    CHECK(*rd.rho == g.x);
  }
  SUBCASE("sl3-minimal: rho_{>0} = 2x = (hvee - 1) x") {
    SuperAlgebra g = builtin_algebra("sl3-minimal");
    Grading gr = grade_by_x(g);
    DualBases db = dual_basis(g, gr);
    RhoData rd = rho_vectors(g, gr, db, true);
    CHECK(rd.rho_pos == vec_scale(g.x, Rational(2)));
  }
  SUBCASE("principal entries: rho_{>0} = rho") {
    for (const char* name : {"sl2-principal", "sl3-principal"}) {
      SuperAlgebra g = builtin_algebra(name);
      Grading gr = grade_by_x(g);
      DualBases db = dual_basis(g, gr);
      RhoData rd = rho_vectors(g, gr, db, true);
      REQUIRE(rd.rho.has_value());
      CHECK(*rd.rho == rd.rho_pos);
    }
  }
  SUBCASE("rho levels sum to rho_{>0}") {
    for (const auto& name : builtin_names()) {
      SuperAlgebra g = builtin_algebra(name);
      Grading gr = grade_by_x(g);
      DualBases db = dual_basis(g, gr);
      CentralizerData cd = check_datum(g, gr);
      RhoData rd = rho_vectors(g, gr, db, cd.iso_half);
      Vec sum = vec_zero(g.dim());
      for (const auto& [deg, rj] : rd.rho_level) sum = vec_add(sum, rj);
      CHECK(sum == rd.rho_pos);
    }
  }
}

TEST_CASE("degree-zero Casimir piece") {
  SUBCASE("sl3-minimal: Omega_0 = 2 ad(rho_{>0}) on the half level") {
    SuperAlgebra g = builtin_algebra("sl3-minimal");
    Grading gr = grade_by_x(g);
    DualBases db = dual_basis(g, gr);
    RhoData rd = rho_vectors(g, gr, db, true);
    Omega0Data od = omega0(g, gr, db);
    for (size_t i : gr.half) {
      Vec got = od.omega0.apply(g.basis_vec(i));
      Vec want = vec_scale(g.bracket(rd.rho_pos, g.basis_vec(i)), Rational(2));
      CHECK(got == want);
    }
    // diagonalizable with rational spectrum at every positive level
    for (const auto& rep : od.levels) {
      CHECK(rep.squarefree);
      CHECK(rep.splits);
    }
  }
  SUBCASE("sl2-principal: Omega_0 acts on the top level by the kappa_0 scalar") {
    SuperAlgebra g = builtin_algebra("sl2-principal");
    Grading gr = grade_by_x(g);
    DualBases db = dual_basis(g, gr);
    Omega0Data od = omega0(g, gr, db);
    // (ad h/2)(ad h) e = 2e, matching kappa_0(e, f) = (Omega_0 e | f) = 2
    CHECK(od.omega0.apply(by_name(g, "e")) == vec_scale(by_name(g, "e"), Rational(2)));
    CHECK(killing(g, gr, by_name(g, "e"), by_name(g, "f"), KillingSel::Degree, Rational(0)) ==
          Rational(2));
  }
  SUBCASE("symmetry (Omega_0 u | v) = (u | Omega_0 v) on every entry") {
    for (const auto& name : builtin_names()) {
      SuperAlgebra g = builtin_algebra(name);
      Grading gr = grade_by_x(g);
      DualBases db = dual_basis(g, gr);
      Omega0Data od = omega0(g, gr, db);
      for (size_t i = 0; i < g.dim(); ++i)
        for (size_t j = 0; j < g.dim(); ++j)
          CHECK(g.pair(od.omega0.apply(g.basis_vec(i)), g.basis_vec(j)) ==
                g.pair(g.basis_vec(i), od.omega0.apply(g.basis_vec(j))));
    }
  }
}

TEST_CASE("partial Killing form identities hold on all basis pairs") {
  for (const auto& name : builtin_names()) {
    SuperAlgebra g = builtin_algebra(name);
    Grading gr = grade_by_x(g);
    for (size_t i = 0; i < g.dim(); ++i)
      for (size_t j = 0; j < g.dim(); ++j) {
        Vec u = g.basis_vec(i), v = g.basis_vec(j);
        Rational kpos = killing(g, gr, u, v, KillingSel::Pos);
        Rational k0 = killing(g, gr, u, v, KillingSel::Degree, Rational(0));
        Rational kfull = killing(g, gr, u, v, KillingSel::Full);
        Rational kneg = supertrace_on(g, g.ad(u) * g.ad(v), gr.neg);
        Rational strpos = supertrace_on(g, g.ad(g.bracket(u, v)), gr.pos);
        CHECK(kneg == kpos - strpos);
        CHECK(kpos == (kfull - k0 + strpos) * half());
      }
  }
}

TEST_CASE("every catalog entry is a good datum satisfying the half condition") {
  for (const auto& name : builtin_names()) {
    SuperAlgebra g = builtin_algebra(name);
    CHECK(validate(g).ok);
    Grading gr = grade_by_x(g);
    CentralizerData cd = check_datum(g, gr);
    CHECK(cd.good);
    CHECK(cd.iso_half);
  }
}
