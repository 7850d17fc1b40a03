#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wick/rational.hpp"

namespace wick {

/// Univariate polynomial in the level parameter k, dense coefficients over Q.
/// Invariant: no trailing zero coefficients (the zero polynomial has none).
class PolyK {
 public:
  PolyK() = default;
  PolyK(const Rational& c);
  PolyK(long c) : PolyK(Rational(c)) {}
  static PolyK k();
  static PolyK monomial(const Rational& c, int n);
  explicit PolyK(std::vector<Rational> coeffs);

  /// Sparse "c*k^n" sums, e.g. "k^2 + 2*k - 3/4".
  static PolyK parse(std::string_view s);
  std::string str() const;

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // zero: -1
  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_constant() const { return c_.size() <= 1; }
  Rational coeff(int n) const;
  Rational leading() const;
  Rational eval(const Rational& k0) const;
  PolyK derivative() const;
  PolyK monic() const;

  friend PolyK operator+(const PolyK& a, const PolyK& b);
  friend PolyK operator-(const PolyK& a, const PolyK& b);
  friend PolyK operator*(const PolyK& a, const PolyK& b);
  PolyK operator-() const;
  PolyK operator*(const Rational& c) const;
  friend bool operator==(const PolyK& a, const PolyK& b) { return a.c_ == b.c_; }

  /// Euclidean division; remainder has degree < deg(b). DivisionByZero if b = 0.
  static std::pair<PolyK, PolyK> divmod(const PolyK& a, const PolyK& b);
  /// Monic gcd; gcd(0,0) = 0.
  static PolyK gcd(PolyK a, PolyK b);

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace wick
