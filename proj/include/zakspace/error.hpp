#pragma once

#include <stdexcept>
#include <string>

namespace zakspace {

// Numeric values are part of the C ABI (see zakspace.h); keep them stable.
enum class ErrorCode : int {
  Ok = 0,
  InvalidArgument = 1,
  OutOfRange = 2,
  SizeMismatch = 3,
  ShapeMismatch = 4,

  NotAssociative = 10,
  NoIdentity = 11,
  NoInverse = 12,
  NotHomomorphism = 13,
  NonpositiveWeight = 14,
  EmptySet = 15,

  NotAbelian = 20,
  NotSubgroup = 21,
  NotIrreducible = 22,
  IncompleteDual = 23,
  NotCosetFunction = 24,

  DualGroupMismatch = 30,
  EquivarianceViolation = 31,
  InvariantViolation = 32,
  NotRepresentative = 33,

  NotInvariant = 40,
  NotHermitian = 41,

  DimensionMismatch = 50,
  TruncationExceeded = 51,
  NotClosable = 52,

  NotTransverse = 60,
  SampleSetNotClosed = 61,
  DensityNotInvariant = 62,

  ParseError = 70,
  SchemaError = 71,
  IoError = 72,

  Internal = 99,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace zakspace
