#include "zakspace/error.hpp"

namespace zakspace {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Ok: return "Ok";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::NonpositiveWeight: return "NonpositiveWeight";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::IncompleteDual: return "IncompleteDual";
    case ErrorCode::NotCosetFunction: return "NotCosetFunction";
    case ErrorCode::DualGroupMismatch: return "DualGroupMismatch";
    case ErrorCode::EquivarianceViolation: return "EquivarianceViolation";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::NotRepresentative: return "NotRepresentative";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::TruncationExceeded: return "TruncationExceeded";
    case ErrorCode::NotClosable: return "NotClosable";
    case ErrorCode::NotTransverse: return "NotTransverse";
    case ErrorCode::SampleSetNotClosed: return "SampleSetNotClosed";
    case ErrorCode::DensityNotInvariant: return "DensityNotInvariant";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace zakspace
