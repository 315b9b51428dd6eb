#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hecke {

/// Failure categories surfaced by the library and mapped onto CLI exit codes.
enum class ErrorKind {
  InvalidArgument,
  NotSquarefree,
  NotAnIdeal,
  IncompatiblePair,
  BoundExceeded,
  RationalInput,
  NotPurelyPeriodic,
  DegenerateWord,
  UnitMismatch,
  DeltaOutOfRange,
  IdealNotCoprime,
  NotFundamental,
  CFMismatch,
  HypothesisFailed,
  NoAdmissibleN,
  InsufficientSamples,
  NarrowClassNotOne,
  ParseError,
  SpecInconsistent,
  NotAdmissible,
  UnknownCommand,
  ValidationError,
  InternalAssertion,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Error(ErrorKind kind, const std::string& message, std::string witness)
      : std::runtime_error(message), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Offending value (prime, digit, ...) when the error carries one; empty otherwise.
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::string witness_;
};

/// Invariant check that is never compiled out. A failure is always a bug.
#define HECKE_ASSERT(cond, msg)                                                  \
  do {                                                                           \
    if (!(cond)) {                                                               \
      throw ::hecke::Error(::hecke::ErrorKind::InternalAssertion,                \
                           std::string("invariant violated: ") + (msg));         \
    }                                                                            \
  } while (false)

}  // namespace hecke
