#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "wick/ratfunk.hpp"

namespace wick {

/// The four generator families of the complex: affine currents a in g,
/// charged fermion pairs (phi_i, phi^i) over S_{>0}, and neutral fermions
/// Phi_i over S_{1/2}. Indices are global basis indices of the algebra.
enum class GenKind : uint8_t { Current = 0, PhiLower = 1, PhiUpper = 2, NeutralPhi = 3 };

struct Generator {
  GenKind kind;
  uint16_t index;
  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator& a, const Generator& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    return a.index <=> b.index;
  }
};

/// One factor del^der(gen) of a normally ordered word.
struct Factor {
  Generator gen;
  uint16_t der = 0;
  friend bool operator==(const Factor&, const Factor&) = default;
  // Canonical factor order: generator, then derivative order descending.
  friend auto operator<=>(const Factor& a, const Factor& b) {
    if (auto c = a.gen <=> b.gen; c != 0) return c;
    return b.der <=> a.der;
  }
};

/// Right-nested normally ordered word :f1 (f2 (... fm)):, factors in the
/// canonical order. The empty word is the vacuum.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Factor> fs) : f_(std::move(fs)) {}
  static Monomial vacuum() { return {}; }
  static Monomial single(Generator g, uint16_t der = 0) { return Monomial({Factor{g, der}}); }

  bool is_vacuum() const { return f_.empty(); }
  size_t size() const { return f_.size(); }
  const Factor& operator[](size_t i) const { return f_[i]; }
  const std::vector<Factor>& factors() const { return f_; }
  Monomial tail() const { return Monomial({f_.begin() + 1, f_.end()}); }
  Monomial with_front(const Factor& f) const;
  bool is_sorted() const;
  size_t count(GenKind k) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    return a.f_ <=> b.f_;
  }

 private:
  std::vector<Factor> f_;
};

/// Scalar-linear combination of canonical monomials. Canonical form: no zero
/// coefficients; equality is map equality.
class VAExpr {
 public:
  VAExpr() = default;
  static VAExpr zero() { return {}; }
  static VAExpr vacuum(const Scalar& c = Scalar(1));
  static VAExpr term(Monomial m, Scalar c);

  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }
  const std::map<Monomial, Scalar>& terms() const { return t_; }
  Scalar coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const Scalar& c);
  VAExpr& operator+=(const VAExpr& o);
  VAExpr& operator-=(const VAExpr& o);
  friend VAExpr operator+(VAExpr a, const VAExpr& b) { a += b; return a; }
  friend VAExpr operator-(VAExpr a, const VAExpr& b) { a -= b; return a; }
  VAExpr operator-() const;
  VAExpr operator*(const Scalar& c) const;
  friend bool operator==(const VAExpr&, const VAExpr&) = default;

 private:
  std::map<Monomial, Scalar> t_;
};

/// Polynomial in lambda with VAExpr coefficients, stored against divided
/// powers: P = sum_n lambda^n/n! * coeff(n).
class LambdaPoly {
 public:
  LambdaPoly() = default;
  static LambdaPoly zero() { return {}; }
  static LambdaPoly constant(VAExpr e);

  bool is_zero() const;
  int degree() const;  // -1 for zero
  /// Coefficient of lambda^n/n! (zero beyond the degree).
  const VAExpr& coeff(int n) const;
  void set_coeff(int n, VAExpr e);
  void trim();

  LambdaPoly& operator+=(const LambdaPoly& o);
  friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { a += b; return a; }
  LambdaPoly operator-() const;
  LambdaPoly operator*(const Scalar& c) const;
  friend bool operator==(const LambdaPoly&, const LambdaPoly&) = default;

 private:
  std::vector<VAExpr> c_;
};

}  // namespace wick
