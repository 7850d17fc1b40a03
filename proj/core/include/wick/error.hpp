#pragma once

#include <stdexcept>
#include <string>

namespace wick {

enum class Errc {
  DivisionByZero,
  PoleAtPoint,
  MalformedTable,
  NotHomogeneous,
  NotHalfInteger,
  FNotDegreeMinusOne,
  SingularGram,
  CentralityFailure,
  NotInCentralizer,
  CriticalStructure,
  Mismatch,
  ParityMismatch,
  NotInBarSubalgebra,
  UnknownDatum,
  UnknownIdentity,
  ParseError,
  ValidationError,
  BadArgument,
};

const char* errc_name(Errc c);

/// Engine exception; code() distinguishes input errors from internal
/// mismatches (the latter map to CLI exit code 3).
class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& what) { throw Error(c, what); }

}  // namespace wick
