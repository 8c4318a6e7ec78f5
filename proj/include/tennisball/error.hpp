#pragma once

#include <stdexcept>
#include <string>

namespace tennis {

enum class ErrorKind {
  InvalidArgument,  // malformed pattern, path, or option
  Precondition,     // caller broke a documented precondition
  CapExceeded,      // desk-scale resource cap hit
  Internal,         // an algebraic invariant failed; indicates a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void throw_error(ErrorKind kind, const std::string& what);

}  // namespace tennis
