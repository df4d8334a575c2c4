#include "forcelab/error.hpp"

namespace forcelab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kStageTooLarge: return "stage-too-large";
    case ErrorCode::kNotAPair: return "not-a-pair";
    case ErrorCode::kArityExceedsContext: return "arity-exceeds-context";
    case ErrorCode::kSyntax: return "syntax-error";
    case ErrorCode::kEnvTooShort: return "env-too-short";
    case ErrorCode::kEnvNotInModel: return "env-not-in-model";
    case ErrorCode::kArityTooLarge: return "arity-too-large";
    case ErrorCode::kUnknownAxiom: return "unknown-axiom";
    case ErrorCode::kNotWellFounded: return "not-well-founded";
    case ErrorCode::kUndefinedPredecessor: return "functional-accessed-undefined-predecessor";
    case ErrorCode::kNotReflexive: return "not-reflexive";
    case ErrorCode::kNotTransitive: return "not-transitive";
    case ErrorCode::kNotAntisymmetric: return "not-antisymmetric";
    case ErrorCode::kNoTop: return "no-top";
    case ErrorCode::kDensityViolated: return "density-violated";
    case ErrorCode::kPosetTooLarge: return "poset-too-large";
    case ErrorCode::kPowNameTooLarge: return "pow-name-too-large";
    case ErrorCode::kModelTooLarge: return "model-too-large";
    case ErrorCode::kNotMinimal: return "not-minimal";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
  }
  return "unknown-error";
}

bool is_cap_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::kStageTooLarge:
    case ErrorCode::kPosetTooLarge:
    case ErrorCode::kPowNameTooLarge:
    case ErrorCode::kModelTooLarge:
      return true;
    default:
      return false;
  }
}

}  // namespace forcelab
