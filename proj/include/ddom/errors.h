#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ddom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad vertex index, bad parameter, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class NotConnected : public InputError {
 public:
  NotConnected() : InputError("graph is not connected") {}
};

class NotProperInterval : public InputError {
 public:
  NotProperInterval() : InputError("graph is not a proper interval graph") {}
};

class NotBco : public InputError {
 public:
  NotBco() : InputError("ordering is not a bi-compatible elimination ordering") {}
};

class MinDegreeTooLow : public InputError {
 public:
  MinDegreeTooLow() : InputError("graph has a vertex of degree < 2") {}
};

class InvalidCertificate : public InputError {
 public:
  using InputError::InputError;
};

class Uncoverable : public InputError {
 public:
  Uncoverable() : InputError("multicover requirements exceed what the whole family provides") {}
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::size_t nodes)
      : Error("search node budget exhausted after " + std::to_string(nodes) + " nodes") {}
};

}  // namespace ddom
