#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grassline {

enum class ErrorCode {
  NonMonomialDeterminant,
  SingularMatrix,
  DeterminantNotOne,
  NotPolynomial,
  DimensionMismatch,
  NotLoopElement,
  NotNilpotent,
  InternalInconsistency,
  NotIotaFixed,
  IllDefinedLimit,
  RankMismatch,
  InvalidCoweight,
  NonTerminatingFactorization,
  NotDiagonalSubstitution,
  NotNormalizedRepresentative,
  ConeViolation,
  ZeroScalar,
  NegativeMultiplicity,
  NonzeroTotalWeight,
  IntegralityViolation,
  InvalidDatum,
  NotStableCostable,
  SamplingExhausted,
  BracketViolation,
  EvenM,
  ParseError,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace grassline
