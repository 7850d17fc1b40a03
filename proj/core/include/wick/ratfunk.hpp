#pragma once

#include <string>
#include <string_view>

#include "wick/polyk.hpp"

namespace wick {

/// Rational function in k over Q. Invariants: den != 0, gcd(num, den) = 1,
/// den monic; zero is 0/1. The coefficient field of every engine expression.
class RatFunK {
 public:
  RatFunK() : num_(), den_(Rational(1)) {}
  RatFunK(const Rational& c) : num_(c), den_(Rational(1)) {}
  RatFunK(long c) : RatFunK(Rational(c)) {}
  RatFunK(PolyK num) : num_(std::move(num)), den_(Rational(1)) {}
  RatFunK(PolyK num, PolyK den);  // normalizes; DivisionByZero if den = 0

  static RatFunK k() { return RatFunK(PolyK::k()); }
  static RatFunK parse(std::string_view s);  // "poly" or "(poly)/(poly)"
  std::string str() const;

  const PolyK& num() const { return num_; }
  const PolyK& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  Rational constant() const;  // BadArgument unless constant
  /// Sign of the leading coefficient of the numerator (den is monic).
  int leading_sign() const { return num_.leading().sign(); }

  Rational eval(const Rational& k0) const;  // PoleAtPoint on denominator zero

  friend RatFunK operator+(const RatFunK& a, const RatFunK& b);
  friend RatFunK operator-(const RatFunK& a, const RatFunK& b);
  friend RatFunK operator*(const RatFunK& a, const RatFunK& b);
  friend RatFunK operator/(const RatFunK& a, const RatFunK& b);
  RatFunK operator-() const;
  RatFunK inv() const;
  RatFunK& operator+=(const RatFunK& b) { return *this = *this + b; }
  RatFunK& operator-=(const RatFunK& b) { return *this = *this - b; }
  RatFunK& operator*=(const RatFunK& b) { return *this = *this * b; }

  friend bool operator==(const RatFunK& a, const RatFunK& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunK& a, const RatFunK& b) { return !(a == b); }

 private:
  PolyK num_, den_;
};

using Scalar = RatFunK;

}  // namespace wick
