#include "degmc/errors.hpp"

namespace degmc {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Input: return "InputError";
    case ErrorKind::Io: return "IoError";
    case ErrorKind::Usage: return "UsageError";
    case ErrorKind::NotGraphical: return "NotGraphical";
    case ErrorKind::NotRealizable: return "NotRealizable";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::InvalidFlow: return "InvalidFlow";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotAnEncoding: return "NotAnEncoding";
    case ErrorKind::TransitionNotOnPath: return "TransitionNotOnPath";
    case ErrorKind::Unbalanced: return "Unbalanced";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotFound: return "NotFound";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

}  // namespace degmc
