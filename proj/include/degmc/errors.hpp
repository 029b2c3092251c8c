#pragma once

#include <stdexcept>
#include <string>

namespace degmc {

enum class ErrorKind {
  Input,
  Io,
  Usage,
  NotGraphical,
  NotRealizable,
  TooLarge,
  NonConvergence,
  InvalidFlow,
  PreconditionViolated,
  NotAnEncoding,
  TransitionNotOnPath,
  Unbalanced,
  InvariantViolation,
  Disconnected,
  NotFound,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace degmc
