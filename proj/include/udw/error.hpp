#pragma once

#include <stdexcept>
#include <string>

namespace udw {

enum class ErrorKind {
  NotAssociative,
  NoIdentity,
  NoInverse,
  BadTable,
  ClosureTooLarge,
  NotHomomorphism,
  NotSurjective,
  UnknownPreset,
  BadParameter,
  DegreeUnsupported,
  NotNormalized,
  NotCocycle,
  MixedGroups,
  MixedAlgebras,
  InconsistentPropagation,
  NotCentral,
  SingularGram,
  EigensplitFailed,
  SplitFailed,
  TwistMismatch,
  IndicatorOutOfRange,
  IndicatorMismatch,
  InvalidSurface,
  RouteMismatch,
  LabelMismatch,
  BudgetExceeded,
  SyntaxError,
  UnknownGenerator,
  UnknownLabel,
  TypeMismatch,
  BadInput,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace udw
