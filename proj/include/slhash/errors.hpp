#ifndef SLHASH_ERRORS_HPP
#define SLHASH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace slhash {

/// Failure categories surfaced by the library. The CLI maps these to exit
/// codes: parameter/validation problems -> 2, budget exhaustion -> 3.
enum class ErrorKind {
  ZeroInverse,
  DimensionMismatch,
  Singular,
  NotPrime,
  CongruenceViolated,
  EllFormViolated,
  EllTooSmall,
  PTooSmall,
  DegenerateGenerators,
  InvalidTrit,
  EmptyTail,
  GroupTooLarge,
  BudgetExceeded,
  NotACollision,
  InvalidTable,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::CongruenceViolated: return "CongruenceViolated";
    case ErrorKind::EllFormViolated: return "EllFormViolated";
    case ErrorKind::EllTooSmall: return "EllTooSmall";
    case ErrorKind::PTooSmall: return "PTooSmall";
    case ErrorKind::DegenerateGenerators: return "DegenerateGenerators";
    case ErrorKind::InvalidTrit: return "InvalidTrit";
    case ErrorKind::EmptyTail: return "EmptyTail";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotACollision: return "NotACollision";
    case ErrorKind::InvalidTable: return "InvalidTable";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace slhash

#endif  // SLHASH_ERRORS_HPP
