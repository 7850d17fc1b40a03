#include <algorithm>
#include <numeric>
#include <sstream>

#include "wick/error.hpp"
#include "wick/superalgebra.hpp"

namespace wick {

namespace {

// Simultaneous ad-eigenvector check: column j of m equals lambda * e_j.
bool eigencolumn(const Mat& m, size_t j, Rational* lambda) {
  for (size_t i = 0; i < m.rows(); ++i)
    if (i != j && !m.at(i, j).is_zero()) return false;
  *lambda = m.at(j, j);
  return true;
}

bool lex_positive(const Vec& w) {
  for (const auto& c : w) {
    if (c.sign() > 0) return true;
    if (c.sign() < 0) return false;
  }
  return false;
}

// Divisors of |n| (as rationals), bounded trial division; nullopt if too big.
std::optional<std::vector<Rational>> small_divisors(const Rational& n) {
  if (!n.is_integer()) return std::nullopt;
  mpz_class v = ::abs(n.raw().get_num());
  if (v == 0) return std::vector<Rational>{};
  if (!v.fits_slong_p()) return std::nullopt;
  long m = v.get_si();
  if (m > 1000000L) return std::nullopt;
  std::vector<Rational> out;
  for (long d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    out.push_back(Rational(d));
    if (d != m / d) out.push_back(Rational(m / d));
  }
  return out;
}

}  // namespace

RhoData rho_vectors(const SuperAlgebra& alg, const Grading& gr, const DualBases& duals,
                    bool iso_half) {
  RhoData rd;
  size_t n = alg.dim();
  rd.rho_pos = vec_zero(n);
  rd.rho_half = vec_zero(n);
  for (const auto& [deg, idx] : gr.levels) {
    if (deg.sign() <= 0) continue;
    Vec rj = vec_zero(n);
    for (size_t i : idx) {
      Vec term = alg.bracket(alg.basis_vec(i), duals.dual[i]);
      rj = vec_add(rj, vec_scale(term, alg.parity[i] ? Rational(-1) : Rational(1)));
    }
    rj = vec_scale(rj, half());
    rd.rho_level.push_back({deg, rj});
    rd.rho_pos = vec_add(rd.rho_pos, rj);
    if (deg == half()) rd.rho_half = rj;
  }

  // str_{g_{>0}} ad v = 2 (rho_{>0} | v) for v in g_0; an engine bug otherwise.
  for (size_t i : gr.zero) {
    Rational lhs = supertrace_on(alg, alg.ad(alg.basis_vec(i)), gr.pos);
    Rational rhs = Rational(2) * alg.pair(rd.rho_pos, alg.basis_vec(i));
    if (lhs != rhs)
      fail(Errc::Mismatch, "positive-part trace identity fails on " + alg.basis[i]);
  }

  if (iso_half) {
    for (size_t i : gr.zero)
      if (!vec_is_zero(alg.bracket(rd.rho_pos, alg.basis_vec(i))))
        fail(Errc::CentralityFailure,
             "rho_{>0} does not centralize g_0 (offending element " + alg.basis[i] + ")");
  }

  // Root data: Cartan = even degree-0 basis vectors with diagonal ad.
  std::vector<Mat> ads(n);
  for (size_t i = 0; i < n; ++i) ads[i] = alg.ad(alg.basis_vec(i));
  for (size_t i : gr.zero) {
    if (alg.parity[i]) continue;
    bool diag = true;
    Rational lam;
    for (size_t j = 0; j < n && diag; ++j) diag = eigencolumn(ads[i], j, &lam);
    if (diag) rd.cartan.push_back(i);
  }
  std::ostringstream rec;
  rec << "cartan = {";
  for (size_t c = 0; c < rd.cartan.size(); ++c)
    rec << (c ? ", " : "") << alg.basis[rd.cartan[c]];
  rec << "}; positive = degree > 0, or degree 0 with lex-positive weight";

  bool roots_ok = !rd.cartan.empty();
  std::vector<Vec> weight;  // per basis index, coords over rd.cartan
  if (roots_ok) {
    weight.assign(n, Vec(rd.cartan.size(), Rational(0)));
    for (size_t j = 0; j < n && roots_ok; ++j) {
      for (size_t c = 0; c < rd.cartan.size(); ++c) {
        Rational lam;
        if (!eigencolumn(ads[rd.cartan[c]], j, &lam)) {
          roots_ok = false;
          break;
        }
        weight[j][c] = lam;
      }
    }
  }
  if (roots_ok) {
    bool in_cartan_mask[64] = {};
    for (size_t c : rd.cartan) in_cartan_mask[c] = true;
    for (size_t j = 0; j < n; ++j) {
      if (j < 64 && in_cartan_mask[j]) continue;
      bool positive = gr.deg[j].sign() > 0 ||
                      (gr.deg[j].sign() == 0 && lex_positive(weight[j]));
      if (positive) rd.positive_roots.push_back(j);
      if (gr.deg[j].sign() == 0 && vec_is_zero(weight[j])) roots_ok = false;  // not a root vector
    }
  }
  if (roots_ok) {
    // rho as a functional on the Cartan, then identified with an element of it.
    size_t m = rd.cartan.size();
    Vec rho_fun(m, Rational(0));
    for (size_t j : rd.positive_roots) {
      Rational s = alg.parity[j] ? Rational(-1, 2) : Rational(1, 2);
      for (size_t c = 0; c < m; ++c) rho_fun[c] += s * weight[j][c];
    }
    Mat gram(m, m);
    for (size_t a = 0; a < m; ++a)
      for (size_t b = 0; b < m; ++b)
        gram.at(a, b) = alg.form.at(rd.cartan[b], rd.cartan[a]);
    auto coeffs = gram.solve(rho_fun);
    if (coeffs) {
      Vec rho(n, Rational(0));
      for (size_t c = 0; c < m; ++c) rho[rd.cartan[c]] = (*coeffs)[c];
      rd.rho = rho;
      // highest root: the unique positive root vector killed by every positive one
      std::vector<size_t> highest;
      for (size_t j : rd.positive_roots) {
        bool top = true;
        for (size_t i : rd.positive_roots)
          if (!vec_is_zero(alg.bracket(alg.basis_vec(i), alg.basis_vec(j)))) {
            top = false;
            break;
          }
        if (top) highest.push_back(j);
      }
      if (highest.size() == 1) {
        Vec th_fun(m, Rational(0));
        for (size_t c = 0; c < m; ++c) th_fun[c] = weight[highest[0]][c];
        if (auto tc = gram.solve(th_fun)) {
          Vec th(n, Rational(0));
          for (size_t c = 0; c < m; ++c) th[rd.cartan[c]] = (*tc)[c];
          rd.theta = th;
          rec << "; highest root vector = " << alg.basis[highest[0]];
        }
      }
    }
  }
  if (!rd.rho) rec << "; full rho unavailable (basis does not split into root vectors)";
  rd.record = rec.str();
  return rd;
}

Omega0Data omega0(const SuperAlgebra& alg, const Grading& gr, const DualBases& duals) {
  Omega0Data od;
  size_t n = alg.dim();
  od.omega0 = Mat(n, n);
  for (size_t i : gr.zero)
    od.omega0 = od.omega0 + alg.ad(duals.dual[i]) * alg.ad(alg.basis_vec(i));

  std::vector<size_t> zh(gr.zero);
  zh.insert(zh.end(), gr.half.begin(), gr.half.end());
  od.str_zero_half = supertrace_on(alg, od.omega0, zh);

  for (const auto& [deg, idx] : gr.levels) {
    if (deg.sign() <= 0) continue;
    Omega0Data::LevelReport rep;
    rep.degree = deg;
    Mat r = restrict_to(od.omega0, idx);
    PolyK mp = r.min_poly();
    rep.squarefree = PolyK::gcd(mp, mp.derivative()).degree() == 0;
    // Rational-root deflation; leading coefficient is 1 so candidates are
    // integer divisors of the cleared constant term.
    PolyK p = mp;
    bool decided = true;
    std::vector<Rational> eigen;
    while (p.degree() > 0) {
      if (p.coeff(0).is_zero()) {
        eigen.push_back(Rational(0));
        p = PolyK::divmod(p, PolyK::k()).first;
        continue;
      }
      // clear denominators
      long lcm = 1;
      bool small = true;
      for (int d = 0; d <= p.degree(); ++d) {
        const Rational& c = p.coeff(d);
        if (!c.raw().get_den().fits_slong_p()) { small = false; break; }
        long den = c.raw().get_den().get_si();
        lcm = std::lcm(lcm, den);
        if (lcm > 1000000L) { small = false; break; }
      }
      if (!small) { decided = false; break; }
      PolyK ip = p * Rational(lcm);
      auto consts = small_divisors(ip.coeff(0));
      auto leads = small_divisors(ip.leading());
      if (!consts || !leads) { decided = false; break; }
      bool found = false;
      for (const auto& a : *consts) {
        for (const auto& b : *leads) {
          for (int s : {1, -1}) {
            Rational cand = a / b * Rational(s);
            if (p.eval(cand).is_zero()) {
              eigen.push_back(cand);
              p = PolyK::divmod(p, PolyK::k() - PolyK(cand)).first;
              found = true;
              break;
            }
          }
          if (found) break;
        }
        if (found) break;
      }
      if (!found) { decided = false; break; }
    }
    rep.decided = decided;
    rep.splits = decided && p.degree() <= 0;
    if (rep.splits) {
      std::sort(eigen.begin(), eigen.end());
      rep.eigenvalues = eigen;
    }
    od.levels.push_back(std::move(rep));
  }
  return od;
}

}  // namespace wick
