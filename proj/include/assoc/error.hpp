#pragma once

#include <stdexcept>
#include <string>

namespace assoc {

enum class Errc {
  // input validation
  NotSimplyLaced,
  NotDynkin,
  Disconnected,
  BadLabels,
  BadInput,
  // laurent ring
  VarSetMismatch,
  NotDivisible,
  NonMonomialImage,
  ZeroPolynomial,
  // construction alarms: these indicate a bug, not a user error
  InternalRecursionOverrun,
  InternalNegativeHom,
  InternalExchangeError,
  UnmatchedVariable,
  SingularSystem,
  IncompatibleSet,
  UnboundedRay,
  WrongHitIndex,
  DegenerateWalk,
  DimensionMismatch,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace assoc
