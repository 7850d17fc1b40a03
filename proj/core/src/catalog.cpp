#include "wick/catalog.hpp"

#include <algorithm>

#include "wick/error.hpp"

namespace wick {

namespace {

// Catalog algebras are generated from exact matrix realizations inside
// gl(m|n); structure constants, forms and distinguished elements are computed,
// then validated.
struct Model {
  std::string name;
  size_t n = 0;
  std::vector<int> cpar;       // coordinate parities
  Rational scale = Rational(1);  // (a|b) = scale * str(ab)
  std::vector<std::pair<std::string, Mat>> basis;
  Mat xm, fm;
  std::optional<Mat> im;
};

Mat E(size_t n, size_t i, size_t j) {
  Mat m(n, n);
  m.at(i, j) = Rational(1);
  return m;
}

int mat_parity(const Model& md, const Mat& m) {
  int p = -1;
  for (size_t i = 0; i < md.n; ++i)
    for (size_t j = 0; j < md.n; ++j) {
      if (m.at(i, j).is_zero()) continue;
      int q = (md.cpar[i] + md.cpar[j]) % 2;
      if (p == -1) p = q;
      if (p != q) fail(Errc::MalformedTable, "matrix is not parity homogeneous");
    }
  return p == -1 ? 0 : p;
}

Mat mbracket(const Model& md, const Mat& a, const Mat& b) {
  Mat ab = a * b, ba = b * a;
  if (mat_parity(md, a) && mat_parity(md, b)) return ab + ba;
  return ab - ba;
}

Rational mstr(const Model& md, const Mat& a) {
  Rational r(0);
  for (size_t i = 0; i < md.n; ++i)
    r += (md.cpar[i] ? Rational(-1) : Rational(1)) * a.at(i, i);
  return r;
}

SuperAlgebra to_algebra(const Model& md) {
  size_t dim = md.basis.size();
  Mat sys(md.n * md.n, dim);
  for (size_t b = 0; b < dim; ++b)
    for (size_t i = 0; i < md.n; ++i)
      for (size_t j = 0; j < md.n; ++j)
        sys.at(i * md.n + j, b) = md.basis[b].second.at(i, j);
  auto coords = [&](const Mat& m) -> Vec {
    Vec rhs(md.n * md.n, Rational(0));
    for (size_t i = 0; i < md.n; ++i)
      for (size_t j = 0; j < md.n; ++j) rhs[i * md.n + j] = m.at(i, j);
    auto c = sys.solve(rhs);
    if (!c) fail(Errc::MalformedTable, "matrix is not in the span of the declared basis");
    return *c;
  };

  SuperAlgebra alg;
  alg.name = md.name;
  alg.form = Mat(dim, dim);
  for (size_t i = 0; i < dim; ++i) {
    alg.basis.push_back(md.basis[i].first);
    alg.parity.push_back(mat_parity(md, md.basis[i].second));
  }
  alg.brk.assign(dim, std::vector<Vec>(dim));
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j) {
      alg.brk[i][j] = coords(mbracket(md, md.basis[i].second, md.basis[j].second));
      alg.form.at(i, j) = md.scale * mstr(md, md.basis[i].second * md.basis[j].second);
    }
  alg.x = coords(md.xm);
  alg.f = coords(md.fm);
  if (md.im) alg.identity_element = coords(*md.im);
  return alg;
}

Model sl2_principal() {
  Model md;
  md.name = "sl2-principal";
  md.n = 2;
  md.cpar = {0, 0};
  md.basis = {{"e", E(2, 0, 1)},
              {"h", E(2, 0, 0) - E(2, 1, 1)},
              {"f", E(2, 1, 0)}};
  md.xm = (E(2, 0, 0) - E(2, 1, 1)).scale(half());
  md.fm = E(2, 1, 0);
  return md;
}

Model sl3(const std::string& name, bool principal) {
  Model md;
  md.name = name;
  md.n = 3;
  md.cpar = {0, 0, 0};
  Mat h1 = E(3, 0, 0) - E(3, 1, 1), h2 = E(3, 1, 1) - E(3, 2, 2);
  if (principal) {
    md.basis = {{"e13", E(3, 0, 2)}, {"e12", E(3, 0, 1)}, {"e23", E(3, 1, 2)},
                {"h1", h1},          {"h2", h2},          {"e21", E(3, 1, 0)},
                {"e32", E(3, 2, 1)}, {"e31", E(3, 2, 0)}};
    md.xm = E(3, 0, 0) - E(3, 2, 2);  // diag(1, 0, -1)
    md.fm = E(3, 1, 0) + E(3, 2, 1);
  } else {
    md.basis = {{"e13", E(3, 0, 2)}, {"e12", E(3, 0, 1)}, {"e23", E(3, 1, 2)},
                {"h1", h1},          {"h2", h2},          {"e21", E(3, 1, 0)},
                {"e32", E(3, 2, 1)}, {"e31", E(3, 2, 0)}};
    md.xm = (E(3, 0, 0) - E(3, 2, 2)).scale(half());
    md.fm = E(3, 2, 0);
  }
  return md;
}

Model sl4_minimal() {
  Model md;
  md.name = "sl4-minimal";
  md.n = 4;
  md.cpar = {0, 0, 0, 0};
  auto Ee = [&](size_t i, size_t j) { return E(4, i, j); };
  md.basis = {{"e14", Ee(0, 3)},
              {"e12", Ee(0, 1)},
              {"e13", Ee(0, 2)},
              {"e24", Ee(1, 3)},
              {"e34", Ee(2, 3)},
              {"h1", Ee(0, 0) - Ee(1, 1)},
              {"h2", Ee(1, 1) - Ee(2, 2)},
              {"h3", Ee(2, 2) - Ee(3, 3)},
              {"e23", Ee(1, 2)},
              {"e32", Ee(2, 1)},
              {"e21", Ee(1, 0)},
              {"e31", Ee(2, 0)},
              {"e42", Ee(3, 1)},
              {"e43", Ee(3, 2)},
              {"e41", Ee(3, 0)}};
  md.xm = (Ee(0, 0) - Ee(3, 3)).scale(half());
  md.fm = Ee(3, 0);
  return md;
}

Model osp12_principal() {
  Model md;
  md.name = "osp12-principal";
  md.n = 3;
  md.cpar = {0, 1, 1};
  md.scale = Rational(-1);
  Mat vp(3, 3), vm(3, 3);
  vp.at(1, 0) = Rational(1);
  vp.at(0, 2) = Rational(-1);
  vm.at(2, 0) = Rational(1);
  vm.at(0, 1) = Rational(1);
  Mat H = E(3, 1, 1) - E(3, 2, 2);
  md.basis = {{"e", E(3, 1, 2)}, {"psip", vp}, {"h", H}, {"psim", vm}, {"f", E(3, 2, 1)}};
  md.xm = H.scale(half());
  md.fm = E(3, 2, 1);
  return md;
}

Model sl21_minimal() {
  Model md;
  md.name = "sl21-minimal";
  md.n = 3;
  md.cpar = {0, 0, 1};
  md.basis = {{"e12", E(3, 0, 1)},
              {"e13", E(3, 0, 2)},
              {"e32", E(3, 2, 1)},
              {"h1", E(3, 0, 0) - E(3, 1, 1)},
              {"h2", E(3, 1, 1) + E(3, 2, 2)},
              {"e23", E(3, 1, 2)},
              {"e31", E(3, 2, 0)},
              {"e21", E(3, 1, 0)}};
  md.xm = (E(3, 0, 0) - E(3, 1, 1)).scale(half());
  md.fm = E(3, 1, 0);
  return md;
}

Model gl22_principal() {
  Model md;
  md.name = "gl22-principal";
  md.n = 4;
  md.cpar = {0, 0, 1, 1};
  auto Ee = [&](size_t i, size_t j) { return E(4, i, j); };
  md.basis = {{"e12", Ee(0, 1)}, {"e14", Ee(0, 3)}, {"e32", Ee(2, 1)}, {"e34", Ee(2, 3)},
              {"e11", Ee(0, 0)}, {"e22", Ee(1, 1)}, {"e33", Ee(2, 2)}, {"e44", Ee(3, 3)},
              {"e13", Ee(0, 2)}, {"e31", Ee(2, 0)}, {"e24", Ee(1, 3)}, {"e42", Ee(3, 1)},
              {"e21", Ee(1, 0)}, {"e23", Ee(1, 2)}, {"e41", Ee(3, 0)}, {"e43", Ee(3, 2)}};
  Mat x(4, 4);
  x.at(0, 0) = half();
  x.at(1, 1) = -half();
  x.at(2, 2) = half();
  x.at(3, 3) = -half();
  md.xm = x;
  md.fm = Ee(1, 0) + Ee(3, 2);
  md.im = Mat::identity(4);
  return md;
}

Model model_for(const std::string& name) {
  if (name == "sl2-principal") return sl2_principal();
  if (name == "sl3-principal") return sl3(name, true);
  if (name == "sl3-minimal") return sl3(name, false);
  if (name == "sl4-minimal") return sl4_minimal();
  if (name == "osp12-principal") return osp12_principal();
  if (name == "sl21-minimal") return sl21_minimal();
  if (name == "gl22-principal") return gl22_principal();
  fail(Errc::UnknownDatum, "no builtin datum named '" + name + "'");
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"sl2-principal",  "sl3-principal", "sl3-minimal", "sl4-minimal",
          "osp12-principal", "sl21-minimal",  "gl22-principal"};
}

bool is_builtin(const std::string& name) {
  auto names = builtin_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuperAlgebra builtin_algebra(const std::string& name) { return to_algebra(model_for(name)); }

Datum builtin_datum(const std::string& name) {
  MakeOptions opts;
  opts.mode = (name == "gl22-principal") ? Mode::GlNN : Mode::Standard;
  return make_datum(builtin_algebra(name), opts);
}

}  // namespace wick
