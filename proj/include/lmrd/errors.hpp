#pragma once

#include <stdexcept>
#include <string>

namespace lmrd {

enum class ErrorKind {
    NotPrime,
    DegreeTooLarge,
    SpecMismatch,
    DivisionByZero,
    InvalidBase,
    ShapeMismatch,
    AmbientMismatch,
    DimensionMismatch,
    TooFewCodewords,
    CapExceeded,
    InvalidParams,
    LengthMismatch,
    TrivialCode,
    BadInput,
};

/// Single exception type; `kind()` identifies the failed precondition.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace lmrd
