#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wick/linalg.hpp"

namespace wick {

/// Finite-dimensional Lie superalgebra with a fixed homogeneous basis,
/// exact structure constants, an even invariant supersymmetric bilinear form,
/// and distinguished elements x, f. Immutable once built.
struct SuperAlgebra {
  std::string name;
  std::vector<std::string> basis;
  std::vector<int> parity;            // 0 even, 1 odd
  std::vector<std::vector<Vec>> brk;  // brk[i][j] = coordinates of [u_i, u_j]
  Mat form;                           // form.at(i,j) = (u_i | u_j)
  Vec x, f;
  std::optional<Vec> identity_element;  // set for gl(n|n)

  size_t dim() const { return basis.size(); }
  Vec basis_vec(size_t i) const;
  int index_of(const std::string& nm) const;  // -1 if absent
  std::string describe(const Vec& v) const;   // "a*e + b*h" style

  Vec bracket(const Vec& a, const Vec& b) const;
  Rational pair(const Vec& a, const Vec& b) const;
  Mat ad(const Vec& a) const;
  int parity_of(const Vec& v) const;  // 0/1, BadArgument if mixed
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Checks super-antisymmetry, the super-Jacobi identity on all triples,
/// parity homogeneity of the bracket table, and that the form is even,
/// supersymmetric, invariant and non-degenerate. Throws MalformedTable on
/// ragged input; axiom failures are reported, not thrown.
ValidationReport validate(const SuperAlgebra& alg);

/// The ad-x eigenspace decomposition. deg[i] is the x-degree m_i of u_i.
struct Grading {
  std::vector<Rational> deg;
  std::vector<size_t> pos, half, zero, neg;  // index sets S_{>0}, S_{1/2}, S_0, S_{<0}
  std::vector<std::pair<Rational, std::vector<size_t>>> levels;  // ascending degree

  const std::vector<size_t>* level(const Rational& d) const;
  bool holds(size_t i, const Rational& d) const { return deg[i] == d; }
  /// Projection of v onto the span of the listed indices.
  static Vec project(const Vec& v, const std::vector<size_t>& idx);
  Vec project_level(const Vec& v, const Rational& d) const;
  Vec project_pos(const Vec& v) const { return project(v, pos); }
};

/// Errors: NotHomogeneous if some basis vector is not an ad-x eigenvector,
/// NotHalfInteger if an eigenvalue is not in (1/2)Z.
Grading grade_by_x(const SuperAlgebra& alg);

/// Dual bases: u^i with (u_i|u^j) = delta_ij, and for i in S_{1/2} the
/// half-lift u^{(i)} in g_{1/2} dual under the neutral pairing <a,b> = (f|[a,b]).
struct DualBases {
  std::vector<Vec> dual;       // per basis index
  std::vector<Vec> half_dual;  // per position in grading.half
};

DualBases dual_basis(const SuperAlgebra& alg, const Grading& gr);

struct CentralizerData {
  std::vector<Vec> basis;  // of g^f, graded, RREF-deterministic order
  std::vector<std::pair<Rational, std::vector<Vec>>> by_level;
  bool good = false;      // g^f inside g_{<=0}
  bool iso_half = false;  // ad f : g_{1/2} -> g_{-1/2} invertible
  const std::vector<Vec>* level(const Rational& d) const;
};

/// Error: FNotDegreeMinusOne if f is not concentrated in degree -1.
CentralizerData check_datum(const SuperAlgebra& alg, const Grading& gr);

enum class KillingSel { Full, Degree, Pos };

/// Partial Killing forms str(p ad(a) ad(b)) with p the identity, the
/// projection onto the degree-j piece, or onto the positive piece.
Rational killing(const SuperAlgebra& alg, const Grading& gr, const Vec& a, const Vec& b,
                 KillingSel sel, const Rational& j = Rational(0));

Rational supertrace(const SuperAlgebra& alg, const Mat& m);
Rational supertrace_on(const SuperAlgebra& alg, const Mat& m, const std::vector<size_t>& idx);

struct CasimirResult {
  std::optional<Rational> hvee;  // set iff the Casimir acts as the scalar 2*hvee
  Mat omega;                     // sum_j ad(u^j) ad(u_j)
};

CasimirResult dual_coxeter(const SuperAlgebra& alg, const DualBases& duals);

/// rho_{>0} and the per-degree rho_j via the basis-free dual-pair formula;
/// full rho from the recorded positive root system when one exists.
struct RhoData {
  Vec rho_pos;                                         // rho_{>0}
  std::vector<std::pair<Rational, Vec>> rho_level;     // rho_j for positive j
  Vec rho_half;                                        // rho_{1/2}
  std::optional<Vec> rho;                              // full rho; needs roots
  std::vector<size_t> cartan;                          // detected Cartan indices
  std::vector<size_t> positive_roots;                  // indices of positive root vectors
  std::optional<Vec> theta;                            // coweight of the highest root
  std::string record;                                  // positive-system description
};

/// Error: CentralityFailure if iso_half holds but [rho_{>0}, g_0] != 0.
RhoData rho_vectors(const SuperAlgebra& alg, const Grading& gr, const DualBases& duals,
                    bool iso_half);

struct Omega0Data {
  Mat omega0;  // sum over S_0 of ad(u^j) ad(u_j)
  struct LevelReport {
    Rational degree;
    bool squarefree = false;
    bool splits = false;
    bool decided = false;
    std::vector<Rational> eigenvalues;
  };
  std::vector<LevelReport> levels;  // for each positive degree
  Rational str_zero_half;           // supertrace over g_0 + g_{1/2}
};

Omega0Data omega0(const SuperAlgebra& alg, const Grading& gr, const DualBases& duals);

/// Restrict a grading-preserving operator to the listed basis indices.
Mat restrict_to(const Mat& m, const std::vector<size_t>& idx);

}  // namespace wick
