#pragma once

#include <stdexcept>
#include <string>

namespace ehzkit {

enum class Err {
  NotPrime,
  NotIrreducible,
  NotMonic,
  FieldTooLarge,
  BadGenerator,
  FieldMismatch,
  DivisionByZero,
  ParseError,
  NoGenerator,
  DimensionMismatch,
  NotSquare,
  DuplicatePoints,
  BadDimension,
  GuardExceeded,
  WrongKind,
  NotInVk,
  GammaInS,
  NoValidPair,
  NotMds,
  NotDeepHole,
  ShapeMismatch,
  BadCoefficients,
};

const char* err_name(Err e);

/// Single exception type for the whole library; the kind tells callers
/// which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& what)
      : std::runtime_error(std::string(err_name(kind)) + ": " + what), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& what) { throw Error(kind, what); }

}  // namespace ehzkit
