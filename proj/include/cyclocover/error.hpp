#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclocover {

enum class ErrorCode {
  InvalidArgument,
  DegenerateCharacter,
  PreconditionIrreducibility,
  NoUnit,
  ReducibleParameters,
  ReducibleNoUniqueForm,
  NotCoprimeTo6,
  Inadmissible,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::DegenerateCharacter: return "DEGENERATE_CHARACTER";
    case ErrorCode::PreconditionIrreducibility: return "PRECONDITION_IRREDUCIBILITY";
    case ErrorCode::NoUnit: return "NO_UNIT";
    case ErrorCode::ReducibleParameters: return "REDUCIBLE_PARAMETERS";
    case ErrorCode::ReducibleNoUniqueForm: return "REDUCIBLE_NO_UNIQUE_FORM";
    case ErrorCode::NotCoprimeTo6: return "NOT_COPRIME_TO_6";
    case ErrorCode::Inadmissible: return "INADMISSIBLE";
  }
  return "UNKNOWN";
}

/// Domain error carrying a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cyclocover
