#pragma once

#include <stdexcept>
#include <string>

namespace kmb {

enum class Err {
  NotGCM,
  NotFree,
  NotSimplyConnected,
  NoIntegralSolution,
  NotAutomorphism,
  NotInGroup,
  NotFiniteType,
  RankMismatch,
  DivisionNotExact,
  WordNotReduced,
  NotDominant,
  NotInvariant,
  NotABasis,
  NoBasisFound,
  UnsupportedTwist,
  RingMismatch,
  MiddleMismatch,
  NotDivisible,
  AmbientInfinite,
  BadInput,
  ParseError,
};

const char* err_name(Err e);

// One exception type with a machine-readable code; the CLI surfaces the code
// verbatim, so tests can match on it instead of on message text.
class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}

  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

}  // namespace kmb
