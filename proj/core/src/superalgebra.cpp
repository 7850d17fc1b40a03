#include "wick/superalgebra.hpp"

#include <algorithm>
#include <sstream>

#include "wick/error.hpp"

namespace wick {

Vec SuperAlgebra::basis_vec(size_t i) const {
  Vec v(dim(), Rational(0));
  v[i] = Rational(1);
  return v;
}

int SuperAlgebra::index_of(const std::string& nm) const {
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == nm) return static_cast<int>(i);
  return -1;
}

std::string SuperAlgebra::describe(const Vec& v) const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    Rational c = v[i];
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    Rational a = c.abs();
    if (!a.is_one()) os << a.str() << "*";
    os << basis[i];
    first = false;
  }
  if (first) return "0";
  return os.str();
}

Vec SuperAlgebra::bracket(const Vec& a, const Vec& b) const {
  Vec r(dim(), Rational(0));
  for (size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      Rational c = a[i] * b[j];
      const Vec& br = brk[i][j];
      for (size_t k = 0; k < dim(); ++k)
        if (!br[k].is_zero()) r[k] += c * br[k];
    }
  }
  return r;
}

Rational SuperAlgebra::pair(const Vec& a, const Vec& b) const {
  Rational r(0);
  for (size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < dim(); ++j)
      if (!b[j].is_zero() && !form.at(i, j).is_zero()) r += a[i] * b[j] * form.at(i, j);
  }
  return r;
}

Mat SuperAlgebra::ad(const Vec& a) const {
  Mat m(dim(), dim());
  for (size_t j = 0; j < dim(); ++j) {
    Vec col = bracket(a, basis_vec(j));
    for (size_t i = 0; i < dim(); ++i) m.at(i, j) = col[i];
  }
  return m;
}

int SuperAlgebra::parity_of(const Vec& v) const {
  int p = -1;
  for (size_t i = 0; i < dim(); ++i) {
    if (v[i].is_zero()) continue;
    if (p == -1)
      p = parity[i];
    else if (p != parity[i])
      fail(Errc::BadArgument, "vector " + describe(v) + " is not parity homogeneous");
  }
  return p == -1 ? 0 : p;
}

namespace {

Rational sign_of(int parity_product) { return parity_product ? Rational(-1) : Rational(1); }

}  // namespace

ValidationReport validate(const SuperAlgebra& alg) {
  size_t n = alg.dim();
  if (alg.parity.size() != n || alg.brk.size() != n || alg.form.rows() != n ||
      alg.form.cols() != n || alg.x.size() != n || alg.f.size() != n)
    fail(Errc::MalformedTable, "table sizes do not match the declared basis");
  for (const auto& row : alg.brk) {
    if (row.size() != n) fail(Errc::MalformedTable, "ragged bracket table");
    for (const auto& v : row)
      if (v.size() != n) fail(Errc::MalformedTable, "ragged bracket entry");
  }

  ValidationReport rep;
  auto flag = [&](const std::string& msg) {
    rep.ok = false;
    rep.violations.push_back(msg);
  };

  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      // super-antisymmetry
      Vec lhs = alg.brk[i][j];
      Vec rhs = vec_scale(alg.brk[j][i], -sign_of(alg.parity[i] * alg.parity[j]));
      if (lhs != rhs)
        flag("antisymmetry fails on (" + alg.basis[i] + ", " + alg.basis[j] + ")");
      // parity homogeneity of the bracket
      int pb = (alg.parity[i] + alg.parity[j]) % 2;
      for (size_t k = 0; k < n; ++k)
        if (!alg.brk[i][j][k].is_zero() && alg.parity[k] != pb) {
          flag("bracket [" + alg.basis[i] + ", " + alg.basis[j] + "] not parity homogeneous");
          break;
        }
      // form: even and supersymmetric
      if (alg.parity[i] != alg.parity[j] && !alg.form.at(i, j).is_zero())
        flag("form is not even on (" + alg.basis[i] + ", " + alg.basis[j] + ")");
      if (alg.form.at(i, j) != sign_of(alg.parity[i] * alg.parity[j]) * alg.form.at(j, i))
        flag("form is not supersymmetric on (" + alg.basis[i] + ", " + alg.basis[j] + ")");
    }

  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        // super-Jacobi: [u_i,[u_j,u_k]] = [[u_i,u_j],u_k] + (-1)^{p_i p_j}[u_j,[u_i,u_k]]
        Vec lhs = alg.bracket(alg.basis_vec(i), alg.brk[j][k]);
        Vec rhs = vec_add(alg.bracket(alg.brk[i][j], alg.basis_vec(k)),
                          vec_scale(alg.bracket(alg.basis_vec(j), alg.brk[i][k]),
                                    sign_of(alg.parity[i] * alg.parity[j])));
        if (lhs != rhs)
          flag("super-Jacobi fails on (" + alg.basis[i] + ", " + alg.basis[j] + ", " +
               alg.basis[k] + ")");
        // invariance ([a,b]|c) = (a|[b,c])
        Rational l = alg.pair(alg.brk[i][j], alg.basis_vec(k));
        Rational r = alg.pair(alg.basis_vec(i), alg.brk[j][k]);
        if (l != r)
          flag("invariance fails on (" + alg.basis[i] + ", " + alg.basis[j] + ", " +
               alg.basis[k] + "): ([a,b]|c) = " + l.str() + ", (a|[b,c]) = " + r.str());
      }

  if (alg.form.rank() != n) flag("form is degenerate");
  return rep;
}

const std::vector<size_t>* Grading::level(const Rational& d) const {
  for (const auto& [deg, idx] : levels)
    if (deg == d) return &idx;
  return nullptr;
}

Vec Grading::project(const Vec& v, const std::vector<size_t>& idx) {
  Vec r(v.size(), Rational(0));
  for (size_t i : idx) r[i] = v[i];
  return r;
}

Vec Grading::project_level(const Vec& v, const Rational& d) const {
  const auto* idx = level(d);
  if (!idx) return vec_zero(v.size());
  return project(v, *idx);
}

Grading grade_by_x(const SuperAlgebra& alg) {
  size_t n = alg.dim();
  if (alg.parity_of(alg.x) != 0 && !vec_is_zero(alg.x))
    fail(Errc::ValidationError, "x must be even");
  Mat adx = alg.ad(alg.x);
  Grading gr;
  gr.deg.resize(n);
  for (size_t j = 0; j < n; ++j) {
    Rational m = adx.at(j, j);
    for (size_t i = 0; i < n; ++i)
      if (i != j && !adx.at(i, j).is_zero())
        fail(Errc::NotHomogeneous, "basis vector " + alg.basis[j] + " is not an ad-x eigenvector");
    if (!m.is_half_integer())
      fail(Errc::NotHalfInteger,
           "ad-x eigenvalue " + m.str() + " of " + alg.basis[j] + " is not in (1/2)Z");
    gr.deg[j] = m;
  }
  for (size_t j = 0; j < n; ++j) {
    const Rational& m = gr.deg[j];
    if (m.sign() > 0) gr.pos.push_back(j);
    if (m.sign() == 0) gr.zero.push_back(j);
    if (m.sign() < 0) gr.neg.push_back(j);
    if (m == half()) gr.half.push_back(j);
    bool found = false;
    for (auto& [deg, idx] : gr.levels)
      if (deg == m) {
        idx.push_back(j);
        found = true;
      }
    if (!found) gr.levels.push_back({m, {j}});
  }
  std::sort(gr.levels.begin(), gr.levels.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return gr;
}

DualBases dual_basis(const SuperAlgebra& alg, const Grading& gr) {
  DualBases db;
  auto inv = alg.form.inverse();
  if (!inv) fail(Errc::SingularGram, "bilinear form is degenerate");
  // (u_i | u^j) = delta_ij  =>  coordinates of u^j solve G c_j = e_j.
  size_t n = alg.dim();
  db.dual.resize(n);
  for (size_t j = 0; j < n; ++j) {
    Vec c(n, Rational(0));
    for (size_t l = 0; l < n; ++l) c[l] = inv->at(l, j);
    db.dual[j] = std::move(c);
  }
  // Neutral pairing <a,b> = (f|[a,b]) on g_{1/2}; half_dual[j] solves
  // <u_{half[i]}, half_dual[j]> = delta_ij.
  size_t m = gr.half.size();
  if (m > 0) {
    Mat gram(m, m);
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j)
        gram.at(i, j) =
            alg.pair(alg.f, alg.bracket(alg.basis_vec(gr.half[i]), alg.basis_vec(gr.half[j])));
    auto ginv = gram.inverse();
    if (!ginv)
      fail(Errc::SingularGram,
           "neutral pairing on g_{1/2} is degenerate (ad f is not an isomorphism)");
    for (size_t j = 0; j < m; ++j) {
      Vec c(alg.dim(), Rational(0));
      for (size_t l = 0; l < m; ++l) c[gr.half[l]] = ginv->at(l, j);
      db.half_dual.push_back(std::move(c));
    }
    // [u^{(i)}, f] must reproduce the form-dual of u_i
    for (size_t i = 0; i < m; ++i)
      if (alg.bracket(db.half_dual[i], alg.f) != db.dual[gr.half[i]])
        fail(Errc::Mismatch, "half-lift of " + alg.basis[gr.half[i]] + " fails its defining identity");
  }
  return db;
}

const std::vector<Vec>* CentralizerData::level(const Rational& d) const {
  for (const auto& [deg, vs] : by_level)
    if (deg == d) return &vs;
  return nullptr;
}

CentralizerData check_datum(const SuperAlgebra& alg, const Grading& gr) {
  for (size_t i = 0; i < alg.dim(); ++i)
    if (!alg.f[i].is_zero() && gr.deg[i] != Rational(-1))
      fail(Errc::FNotDegreeMinusOne, "f has a component of degree " + gr.deg[i].str());

  CentralizerData cd;
  Mat adf = alg.ad(alg.f);
  cd.good = true;
  for (const auto& [deg, idx] : gr.levels) {
    // ad f maps g_j to g_{j-1}; kernel computed level by level keeps g^f graded.
    const auto* target = gr.level(deg - Rational(1));
    size_t rows = target ? target->size() : 0;
    Mat block(rows == 0 ? 1 : rows, idx.size());
    for (size_t c = 0; c < idx.size(); ++c) {
      Vec img = adf.apply(alg.basis_vec(idx[c]));
      for (size_t r = 0; r < rows; ++r) block.at(r, c) = img[(*target)[r]];
    }
    auto null = block.nullspace();
    if (null.empty()) continue;
    std::vector<Vec> lifted;
    for (const auto& nv : null) {
      Vec v(alg.dim(), Rational(0));
      for (size_t c = 0; c < idx.size(); ++c) v[idx[c]] = nv[c];
      lifted.push_back(v);
      cd.basis.push_back(v);
      if (deg.sign() > 0) cd.good = false;
    }
    cd.by_level.push_back({deg, std::move(lifted)});
  }

  // ad f : g_{1/2} -> g_{-1/2} invertibility
  const auto* down = gr.level(Rational(-1, 2));
  size_t mh = gr.half.size(), md = down ? down->size() : 0;
  if (mh == 0 && md == 0) {
    cd.iso_half = true;
  } else if (mh != md) {
    cd.iso_half = false;
  } else {
    Mat blk(md, mh);
    for (size_t c = 0; c < mh; ++c) {
      Vec img = adf.apply(alg.basis_vec(gr.half[c]));
      for (size_t r = 0; r < md; ++r) blk.at(r, c) = img[(*down)[r]];
    }
    cd.iso_half = blk.rank() == mh;
  }
  return cd;
}

Rational supertrace(const SuperAlgebra& alg, const Mat& m) {
  Rational r(0);
  for (size_t i = 0; i < alg.dim(); ++i)
    r += (alg.parity[i] ? Rational(-1) : Rational(1)) * m.at(i, i);
  return r;
}

Rational supertrace_on(const SuperAlgebra& alg, const Mat& m, const std::vector<size_t>& idx) {
  Rational r(0);
  for (size_t i : idx) r += (alg.parity[i] ? Rational(-1) : Rational(1)) * m.at(i, i);
  return r;
}

Rational killing(const SuperAlgebra& alg, const Grading& gr, const Vec& a, const Vec& b,
                 KillingSel sel, const Rational& j) {
  Mat prod = alg.ad(a) * alg.ad(b);
  switch (sel) {
    case KillingSel::Full:
      return supertrace(alg, prod);
    case KillingSel::Degree: {
      const auto* idx = gr.level(j);
      return idx ? supertrace_on(alg, prod, *idx) : Rational(0);
    }
    case KillingSel::Pos:
      return supertrace_on(alg, prod, gr.pos);
  }
  return Rational(0);
}

CasimirResult dual_coxeter(const SuperAlgebra& alg, const DualBases& duals) {
  size_t n = alg.dim();
  Mat omega(n, n);
  for (size_t j = 0; j < n; ++j) omega = omega + alg.ad(duals.dual[j]) * alg.ad(alg.basis_vec(j));
  CasimirResult res{std::nullopt, omega};
  if (n == 0) return res;
  Rational cand = omega.at(0, 0);
  Mat diff = omega - Mat::identity(n).scale(cand);
  if (diff.is_zero()) res.hvee = cand / Rational(2);
  return res;
}

Mat restrict_to(const Mat& m, const std::vector<size_t>& idx) {
  Mat r(idx.size(), idx.size());
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j) r.at(i, j) = m.at(idx[i], idx[j]);
  return r;
}

}  // namespace wick
