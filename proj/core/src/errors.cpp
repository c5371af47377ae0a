#include "grassline/errors.hpp"

namespace grassline {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonMonomialDeterminant: return "NonMonomialDeterminant";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::DeterminantNotOne: return "DeterminantNotOne";
    case ErrorCode::NotPolynomial: return "NotPolynomial";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotLoopElement: return "NotLoopElement";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::NotIotaFixed: return "NotIotaFixed";
    case ErrorCode::IllDefinedLimit: return "IllDefinedLimit";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::InvalidCoweight: return "InvalidCoweight";
    case ErrorCode::NonTerminatingFactorization: return "NonTerminatingFactorization";
    case ErrorCode::NotDiagonalSubstitution: return "NotDiagonalSubstitution";
    case ErrorCode::NotNormalizedRepresentative: return "NotNormalizedRepresentative";
    case ErrorCode::ConeViolation: return "ConeViolation";
    case ErrorCode::ZeroScalar: return "ZeroScalar";
    case ErrorCode::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorCode::NonzeroTotalWeight: return "NonzeroTotalWeight";
    case ErrorCode::IntegralityViolation: return "IntegralityViolation";
    case ErrorCode::InvalidDatum: return "InvalidDatum";
    case ErrorCode::NotStableCostable: return "NotStableCostable";
    case ErrorCode::SamplingExhausted: return "SamplingExhausted";
    case ErrorCode::BracketViolation: return "BracketViolation";
    case ErrorCode::EvenM: return "EvenM";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace grassline
