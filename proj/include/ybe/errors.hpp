#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ybe {

enum class ErrorCode {
  NonzeroConstantTerm,
  LaurentInput,
  ConstantTermNotOne,
  NonInvertibleLeadingCoefficient,
  PoleAtZero,
  ParameterSetMismatch,
  DimensionMismatch,
  SingularLeadingMatrix,
  ZeroInput,
  UnspecializedParameters,
  ConstantTermNotIdentity,
  NonzeroConstantLambda,
  NonNilpotentAction,
  NonNilpotent,
  ZeroLeadingTerm,
  BracketRelationFails,
  DegreeExceedsK,
  InsufficientOrder,
  UnknownId,
  NoLiteralForm,
  BadParameter,
  ParseError,
  DimensionNotSquare,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorCode::LaurentInput: return "LaurentInput";
    case ErrorCode::ConstantTermNotOne: return "ConstantTermNotOne";
    case ErrorCode::NonInvertibleLeadingCoefficient: return "NonInvertibleLeadingCoefficient";
    case ErrorCode::PoleAtZero: return "PoleAtZero";
    case ErrorCode::ParameterSetMismatch: return "ParameterSetMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularLeadingMatrix: return "SingularLeadingMatrix";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::UnspecializedParameters: return "UnspecializedParameters";
    case ErrorCode::ConstantTermNotIdentity: return "ConstantTermNotIdentity";
    case ErrorCode::NonzeroConstantLambda: return "NonzeroConstantLambda";
    case ErrorCode::NonNilpotentAction: return "NonNilpotentAction";
    case ErrorCode::NonNilpotent: return "NonNilpotent";
    case ErrorCode::ZeroLeadingTerm: return "ZeroLeadingTerm";
    case ErrorCode::BracketRelationFails: return "BracketRelationFails";
    case ErrorCode::DegreeExceedsK: return "DegreeExceedsK";
    case ErrorCode::InsufficientOrder: return "InsufficientOrder";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::NoLiteralForm: return "NoLiteralForm";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DimensionNotSquare: return "DimensionNotSquare";
  }
  return "Unknown";
}

/// Every failure raised by the library. `code()` identifies the condition;
/// the message carries the offending value where one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ybe
