#include "udw/error.hpp"

namespace udw {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::BadTable: return "BadTable";
    case ErrorKind::ClosureTooLarge: return "ClosureTooLarge";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::UnknownPreset: return "UnknownPreset";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::DegreeUnsupported: return "DegreeUnsupported";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::NotCocycle: return "NotCocycle";
    case ErrorKind::MixedGroups: return "MixedGroups";
    case ErrorKind::MixedAlgebras: return "MixedAlgebras";
    case ErrorKind::InconsistentPropagation: return "InconsistentPropagation";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::SingularGram: return "SingularGram";
    case ErrorKind::EigensplitFailed: return "EigensplitFailed";
    case ErrorKind::SplitFailed: return "SplitFailed";
    case ErrorKind::TwistMismatch: return "TwistMismatch";
    case ErrorKind::IndicatorOutOfRange: return "IndicatorOutOfRange";
    case ErrorKind::IndicatorMismatch: return "IndicatorMismatch";
    case ErrorKind::InvalidSurface: return "InvalidSurface";
    case ErrorKind::RouteMismatch: return "RouteMismatch";
    case ErrorKind::LabelMismatch: return "LabelMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::BadInput: return "BadInput";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace udw
