#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace forcelab {

enum class ErrorCode {
  kStageTooLarge,
  kNotAPair,
  kArityExceedsContext,
  kSyntax,
  kEnvTooShort,
  kEnvNotInModel,
  kArityTooLarge,
  kUnknownAxiom,
  kNotWellFounded,
  kUndefinedPredecessor,
  kNotReflexive,
  kNotTransitive,
  kNotAntisymmetric,
  kNoTop,
  kDensityViolated,
  kPosetTooLarge,
  kPowNameTooLarge,
  kModelTooLarge,
  kNotMinimal,
  kInvalidArgument,
};

// Stable kebab-case identifier, used in CLI messages and reports.
std::string_view to_string(ErrorCode code);

// True for the codes that signal an exceeded resource cap.
bool is_cap_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace forcelab
