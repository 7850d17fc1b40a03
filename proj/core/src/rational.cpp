#include "wick/rational.hpp"

#include <ostream>

#include "wick/error.hpp"

namespace wick {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::PoleAtPoint: return "PoleAtPoint";
    case Errc::MalformedTable: return "MalformedTable";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::NotHalfInteger: return "NotHalfInteger";
    case Errc::FNotDegreeMinusOne: return "FNotDegreeMinusOne";
    case Errc::SingularGram: return "SingularGram";
    case Errc::CentralityFailure: return "CentralityFailure";
    case Errc::NotInCentralizer: return "NotInCentralizer";
    case Errc::CriticalStructure: return "CriticalStructure";
    case Errc::Mismatch: return "Mismatch";
    case Errc::ParityMismatch: return "ParityMismatch";
    case Errc::NotInBarSubalgebra: return "NotInBarSubalgebra";
    case Errc::UnknownDatum: return "UnknownDatum";
    case Errc::UnknownIdentity: return "UnknownIdentity";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::BadArgument: return "BadArgument";
  }
  return "UnknownError";
}

Rational::Rational(long num, long den) {
  if (den == 0) fail(Errc::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) {
  if (v_.get_den() == 0) fail(Errc::DivisionByZero, "rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
  if (s.empty()) fail(Errc::ParseError, "empty rational literal");
  std::string t(s);
  for (char c : t) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      fail(Errc::ParseError, "bad character in rational literal '" + t + "'");
  }
  try {
    mpq_class v(t);
    if (v.get_den() == 0) fail(Errc::DivisionByZero, "zero denominator in '" + t + "'");
    v.canonicalize();
    return Rational(v);
  } catch (const std::invalid_argument&) {
    fail(Errc::ParseError, "bad rational literal '" + t + "'");
  }
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

bool Rational::is_half_integer() const {
  mpq_class d = v_ * 2;
  d.canonicalize();
  return d.get_den() == 1;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::inv() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1 / v_));
}

long Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p())
    fail(Errc::BadArgument, "rational " + str() + " is not a small integer");
  return v_.get_num().get_si();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) fail(Errc::DivisionByZero, "division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace wick
