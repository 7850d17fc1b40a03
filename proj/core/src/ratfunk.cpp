#include "wick/ratfunk.hpp"

#include "wick/error.hpp"

namespace wick {

RatFunK::RatFunK(PolyK num, PolyK den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(Errc::DivisionByZero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = PolyK(Rational(1));
    return;
  }
  PolyK g = PolyK::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = PolyK::divmod(num_, g).first;
    den_ = PolyK::divmod(den_, g).first;
  }
  Rational lead = den_.leading();
  if (!lead.is_one()) {
    Rational inv = lead.inv();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

Rational RatFunK::constant() const {
  if (!is_constant()) fail(Errc::BadArgument, "not a constant: " + str());
  return num_.coeff(0);
}

Rational RatFunK::eval(const Rational& k0) const {
  Rational d = den_.eval(k0);
  if (d.is_zero())
    fail(Errc::PoleAtPoint, "denominator " + den_.str() + " vanishes at k = " + k0.str());
  return num_.eval(k0) / d;
}

RatFunK operator+(const RatFunK& a, const RatFunK& b) {
  return RatFunK(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunK operator-(const RatFunK& a, const RatFunK& b) {
  return RatFunK(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunK operator*(const RatFunK& a, const RatFunK& b) {
  return RatFunK(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunK operator/(const RatFunK& a, const RatFunK& b) {
  if (b.is_zero()) fail(Errc::DivisionByZero, "division by zero rational function");
  return RatFunK(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunK RatFunK::operator-() const {
  RatFunK r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFunK RatFunK::inv() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero rational function");
  return RatFunK(den_, num_);
}

RatFunK RatFunK::parse(std::string_view s) {
  // Either a bare polynomial or "(num)/(den)".
  size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  if (i < s.size() && s[i] == '(') {
    size_t depth = 0, j = i;
    for (; j < s.size(); ++j) {
      if (s[j] == '(') ++depth;
      if (s[j] == ')' && --depth == 0) break;
    }
    if (j >= s.size()) fail(Errc::ParseError, "unbalanced parentheses in '" + std::string(s) + "'");
    size_t after = j + 1;
    while (after < s.size() && std::isspace(static_cast<unsigned char>(s[after]))) ++after;
    if (after < s.size() && s[after] == '/') {
      std::string_view numsv = s.substr(i + 1, j - i - 1);
      size_t d0 = after + 1;
      while (d0 < s.size() && std::isspace(static_cast<unsigned char>(s[d0]))) ++d0;
      if (d0 >= s.size() || s[d0] != '(')
        fail(Errc::ParseError, "expected '(' after '/' in '" + std::string(s) + "'");
      size_t d1 = s.rfind(')');
      if (d1 == std::string_view::npos || d1 <= d0)
        fail(Errc::ParseError, "unbalanced parentheses in '" + std::string(s) + "'");
      return RatFunK(PolyK::parse(numsv), PolyK::parse(s.substr(d0 + 1, d1 - d0 - 1)));
    }
  }
  return RatFunK(PolyK::parse(s));
}

std::string RatFunK::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace wick
