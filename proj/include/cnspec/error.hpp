#pragma once

#include <stdexcept>
#include <string>

namespace cnspec {

enum class ErrorKind {
  NonPrime,
  TooLarge,
  DivisionByZero,
  InvalidPresentation,
  InvalidParams,
  AbelianGroup,
  MalformedInput,
  LoopEdge,
  NoConvergence,
  AmbiguousCluster,
  OutOfDomain,
  InvalidSizes,
  NotCliqueUnion,
  NotConstructible,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InvalidPresentation: return "InvalidPresentation";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::AbelianGroup: return "AbelianGroup";
    case ErrorKind::MalformedInput: return "MalformedInput";
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::AmbiguousCluster: return "AmbiguousCluster";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::InvalidSizes: return "InvalidSizes";
    case ErrorKind::NotCliqueUnion: return "NotCliqueUnion";
    case ErrorKind::NotConstructible: return "NotConstructible";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cnspec
