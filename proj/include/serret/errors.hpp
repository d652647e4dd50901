#pragma once

#include <stdexcept>
#include <string>

namespace serret {

enum class ErrorKind {
  BadDeterminant,
  NegativeEntries,
  NotAPartition,
  WrongOrder,
  TooFewBranches,
  NotNonnegative,
  EmptyWord,
  BoundExceeded,
  Stuck,
  Parse,
  Domain,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadDeterminant: return "BadDeterminant";
    case ErrorKind::NegativeEntries: return "NegativeEntries";
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::WrongOrder: return "WrongOrder";
    case ErrorKind::TooFewBranches: return "TooFewBranches";
    case ErrorKind::NotNonnegative: return "NotNonnegative";
    case ErrorKind::EmptyWord: return "EmptyWord";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::Stuck: return "Stuck";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Domain: return "DomainError";
  }
  return "Error";
}

}  // namespace serret
