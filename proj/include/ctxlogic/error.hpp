#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ctxlogic {

enum class ErrorKind {
  malformed_input,
  syntax,
  sort,
  unsupported,
  budget_exceeded,
  range,
  invariant,
  io,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& message)
      : Error(ErrorKind::syntax, "offset " + std::to_string(offset) + ": " + message),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace ctxlogic
