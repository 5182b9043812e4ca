#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trigonal {

enum class Errc {
  FieldMismatch,
  DivisionByZero,
  NotInvertible,
  ReducibleModulus,
  UnsupportedDegree,
  ZeroPolynomial,
  DegreeTooSmall,
  NotDivisible,
  UnknownVariable,
  VariableMismatch,
  PoleAtPoint,
  ZeroForm,
  JTwoZero,
  PreconditionViolated,
  NotGenusTwo,
  UnsupportedSubcase,
  DegenerateParameters,
  SingularCubic,
  CommonRoot,
  RepeatedRoot,
  ParseError,
  CalibrationFailed,
  DataIntegrity,
};

inline std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::UnsupportedDegree: return "UnsupportedDegree";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::DegreeTooSmall: return "DegreeTooSmall";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::VariableMismatch: return "VariableMismatch";
    case Errc::PoleAtPoint: return "PoleAtPoint";
    case Errc::ZeroForm: return "ZeroForm";
    case Errc::JTwoZero: return "JTwoZero";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::NotGenusTwo: return "NotGenusTwo";
    case Errc::UnsupportedSubcase: return "UnsupportedSubcase";
    case Errc::DegenerateParameters: return "DegenerateParameters";
    case Errc::SingularCubic: return "SingularCubic";
    case Errc::CommonRoot: return "CommonRoot";
    case Errc::RepeatedRoot: return "RepeatedRoot";
    case Errc::ParseError: return "ParseError";
    case Errc::CalibrationFailed: return "CalibrationFailed";
    case Errc::DataIntegrity: return "DataIntegrity";
  }
  return "Unknown";
}

// `guard` names the vanishing quantity (e.g. "v=27", "J2=0") when there is one.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message, std::string guard = {})
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        message_(std::move(message)),
        guard_(std::move(guard)) {}

  Errc code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }
  const std::string& guard() const noexcept { return guard_; }

 private:
  Errc code_;
  std::string message_;
  std::string guard_;
};

}  // namespace trigonal
