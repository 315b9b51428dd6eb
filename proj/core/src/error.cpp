#include "hecke/error.hpp"

namespace hecke {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::IncompatiblePair: return "IncompatiblePair";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::RationalInput: return "RationalInput";
    case ErrorKind::NotPurelyPeriodic: return "NotPurelyPeriodic";
    case ErrorKind::DegenerateWord: return "DegenerateWord";
    case ErrorKind::UnitMismatch: return "UnitMismatch";
    case ErrorKind::DeltaOutOfRange: return "DeltaOutOfRange";
    case ErrorKind::IdealNotCoprime: return "IdealNotCoprime";
    case ErrorKind::NotFundamental: return "NotFundamental";
    case ErrorKind::CFMismatch: return "CFMismatch";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::NoAdmissibleN: return "NoAdmissibleN";
    case ErrorKind::InsufficientSamples: return "InsufficientSamples";
    case ErrorKind::NarrowClassNotOne: return "NarrowClassNotOne";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SpecInconsistent: return "SpecInconsistent";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::UnknownCommand: return "UnknownCommand";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::InternalAssertion: return "InternalAssertion";
  }
  return "Unknown";
}

}  // namespace hecke
