#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace corelate {

enum class ErrorKind {
  TypeMismatch,
  RingMismatch,
  ZeroInverse,
  NotAUnit,
  ZeroDenominator,
  NotInA,
  NotAbelian,
  SyntaxError,
  TypeError,
  UnknownGenerator,
  UnknownTheory,
  InvalidLiteral,
  Internal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

// Syntax errors carry the byte offset into the source text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorKind::SyntaxError, "at " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace corelate
