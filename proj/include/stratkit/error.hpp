#pragma once

#include <stdexcept>
#include <string>

namespace stratkit {

enum class ErrorKind {
  Syntax,
  UnknownSymbol,
  DuplicateName,
  NonComposablePath,
  NonHomogeneousRelation,
  NotFiniteWithinBound,
  CompletionOverflow,
  NotFinite,
  UnknownVertex,
  VectorOutOfSpace,
  NotStable,
  TooLarge,
  NotInitialSegment,
  HypothesisViolated,
  WitnessFailure,
  NotTruncatedModule,
  SimplesUncertified,
  NoFiltrationFound,
  DivisibilityFailure,
  CertificateFailure,
  Invalid,
  Internal,
};

const char* errorKindName(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(errorKindName(kind)) + ": " + msg),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) {
  throw Error(k, msg);
}

// Internal consistency check; a failure here is a bug, not bad input.
inline void ensure(bool cond, const std::string& msg) {
  if (!cond) fail(ErrorKind::Internal, msg);
}

}  // namespace stratkit
