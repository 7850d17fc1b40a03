#include "wick/polyk.hpp"

#include <algorithm>
#include <cctype>

#include "wick/error.hpp"

namespace wick {

PolyK::PolyK(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

PolyK PolyK::k() { return monomial(Rational(1), 1); }

PolyK PolyK::monomial(const Rational& c, int n) {
  PolyK p;
  if (c.is_zero()) return p;
  p.c_.assign(static_cast<size_t>(n) + 1, Rational(0));
  p.c_[static_cast<size_t>(n)] = c;
  return p;
}

PolyK::PolyK(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void PolyK::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool PolyK::is_one() const { return c_.size() == 1 && c_[0].is_one(); }

Rational PolyK::coeff(int n) const {
  if (n < 0 || n >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<size_t>(n)];
}

Rational PolyK::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational PolyK::eval(const Rational& k0) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * k0 + *it;
  return acc;
}

PolyK PolyK::derivative() const {
  std::vector<Rational> d;
  for (size_t n = 1; n < c_.size(); ++n) d.push_back(c_[n] * Rational(static_cast<long>(n)));
  return PolyK(std::move(d));
}

PolyK PolyK::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inv();
}

PolyK operator+(const PolyK& a, const PolyK& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return PolyK(std::move(c));
}

PolyK operator-(const PolyK& a, const PolyK& b) { return a + (-b); }

PolyK operator*(const PolyK& a, const PolyK& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return PolyK(std::move(c));
}

PolyK PolyK::operator-() const {
  std::vector<Rational> c;
  c.reserve(c_.size());
  for (const auto& x : c_) c.push_back(-x);
  return PolyK(std::move(c));
}

PolyK PolyK::operator*(const Rational& s) const {
  if (s.is_zero()) return {};
  std::vector<Rational> c;
  c.reserve(c_.size());
  for (const auto& x : c_) c.push_back(x * s);
  return PolyK(std::move(c));
}

std::pair<PolyK, PolyK> PolyK::divmod(const PolyK& a, const PolyK& b) {
  if (b.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
  std::vector<Rational> rem = a.c_;
  int db = b.degree();
  Rational lb = b.leading().inv();
  if (a.degree() < db) return {PolyK{}, a};
  std::vector<Rational> quot(static_cast<size_t>(a.degree() - db) + 1, Rational(0));
  for (int d = a.degree(); d >= db; --d) {
    Rational c = rem[static_cast<size_t>(d)];
    if (c.is_zero()) continue;
    Rational q = c * lb;
    quot[static_cast<size_t>(d - db)] = q;
    for (int i = 0; i <= db; ++i) rem[static_cast<size_t>(d - db + i)] -= q * b.coeff(i);
  }
  return {PolyK(std::move(quot)), PolyK(std::move(rem))};
}

PolyK PolyK::gcd(PolyK a, PolyK b) {
  while (!b.is_zero()) {
    PolyK r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

struct Cursor {
  std::string_view s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() { return s[i]; }
};

Rational parse_number(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  while (c.i < c.s.size() &&
         (std::isdigit(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '/'))
    ++c.i;
  if (c.i == start) fail(Errc::ParseError, "expected number in polynomial literal");
  return Rational::parse(c.s.substr(start, c.i - start));
}

}  // namespace

PolyK PolyK::parse(std::string_view s) {
  Cursor c{s};
  PolyK result;
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    c.skip_ws();
    if (c.peek() == '+' || c.peek() == '-') {
      sign = (c.peek() == '-') ? -1 : 1;
      ++c.i;
    } else if (!first) {
      fail(Errc::ParseError, "expected '+' or '-' in polynomial literal");
    }
    c.skip_ws();
    if (c.done()) fail(Errc::ParseError, "dangling sign in polynomial literal");
    Rational coef(1);
    bool saw_coef = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coef = parse_number(c);
      saw_coef = true;
      c.skip_ws();
      if (!c.done() && c.peek() == '*') {
        ++c.i;
        c.skip_ws();
      }
    }
    int deg = 0;
    if (!c.done() && c.peek() == 'k') {
      ++c.i;
      deg = 1;
      c.skip_ws();
      if (!c.done() && c.peek() == '^') {
        ++c.i;
        Rational d = parse_number(c);
        deg = static_cast<int>(d.to_long());
        if (deg < 0) fail(Errc::ParseError, "negative exponent");
      }
    } else if (!saw_coef) {
      fail(Errc::ParseError, "expected coefficient or 'k' in polynomial literal");
    }
    result = result + monomial(coef * Rational(sign), deg);
    first = false;
  }
  return result;
}

std::string PolyK::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    Rational c = coeff(d);
    if (c.is_zero()) continue;
    bool leading_term = out.empty();
    if (leading_term) {
      if (c.sign() < 0) out += "-";
    } else {
      out += (c.sign() < 0) ? " - " : " + ";
    }
    Rational a = c.abs();
    if (d == 0) {
      out += a.str();
    } else {
      if (!a.is_one()) out += a.str() + "*";
      out += (d == 1) ? "k" : ("k^" + std::to_string(d));
    }
  }
  return out;
}

}  // namespace wick
