#pragma once

#include <stdexcept>
#include <string>

namespace pcf {

enum class ErrorKind {
  DuplicateName,
  UnknownElement,
  CycleError,
  CapExceeded,
  NotTotal,
  NotSelection,
  NotIdeal,
  DuplicateKey,
  PosetMismatch,
  NotConservative,
  ElementNotChosen,
  SelectorViolation,
  ParseError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pcf
