// Copyright 2026 the msgame authors
// Licensed under the Apache License, Version 2.0

#ifndef MSGAME_ERRORS_HPP
#define MSGAME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace msgame {

// Error taxonomy shared by the whole library.  Every failure that a caller
// can trigger through inputs is one of these kinds; internal assertion
// failures use kCertificateFailure.
enum class ErrorKind {
  kOffLattice,          // time is not a valid multiple for the weight lattice
  kIllegalMove,         // a move violates the nesting/step rules
  kStepExhausted,       // a transport leaves no room for the inner step
  kNonDyadic,           // a value required to be dyadic is not
  kLatticeClash,        // rescaled parameters cannot live on any common grid
  kBadAliceStep,        // step width too small (or off-grid) for the strategy
  kBadInitialTime,      // initial time below the strategy's safe threshold
  kCertificateFailure,  // an exact invariant the engine guarantees was violated
  kFullDimensional,     // point set spans all of space; no hyperplane exists
  kParseError,          // malformed textual input
  kConfigError,         // inconsistent run configuration
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by the referee when a strategy returns an invalid box.
class IllegalMoveError : public Error {
 public:
  IllegalMoveError(const std::string& player, int round, const std::string& message)
      : Error(ErrorKind::kIllegalMove,
              player + " at round " + std::to_string(round) + ": " + message),
        player_(player),
        round_(round) {}

  const std::string& player() const { return player_; }
  int round() const { return round_; }

 private:
  std::string player_;
  int round_;
};

inline const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kOffLattice: return "OffLattice";
    case ErrorKind::kIllegalMove: return "IllegalMove";
    case ErrorKind::kStepExhausted: return "StepExhausted";
    case ErrorKind::kNonDyadic: return "NonDyadic";
    case ErrorKind::kLatticeClash: return "LatticeClash";
    case ErrorKind::kBadAliceStep: return "BadAliceStep";
    case ErrorKind::kBadInitialTime: return "BadInitialTime";
    case ErrorKind::kCertificateFailure: return "CertificateFailure";
    case ErrorKind::kFullDimensional: return "FullDimensional";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kConfigError: return "ConfigError";
  }
  return "UnknownError";
}

}  // namespace msgame

#endif  // MSGAME_ERRORS_HPP
