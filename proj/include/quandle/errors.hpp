#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quandle {

// Process exit codes shared by the CLI and the verification harnesses.
enum class ExitCode : int {
  ok = 0,
  counterexample = 1,      // Hayashi counterexample candidate
  theorem_falsified = 2,   // a proved statement failed: implementation bug
  resource_cap = 3,
  input_error = 4,
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual ExitCode exit_code() const noexcept { return ExitCode::input_error; }
};

// An element set or search grew past the configured desk-scale limit.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& what) : Error("cap exceeded: " + what) {}
  ExitCode exit_code() const noexcept override { return ExitCode::resource_cap; }
};

// A size bound on the input (degree, rack order) was exceeded.
class BoundExceeded : public Error {
 public:
  explicit BoundExceeded(const std::string& what) : Error("bound exceeded: " + what) {}
  ExitCode exit_code() const noexcept override { return ExitCode::resource_cap; }
};

class TheoremFalsified : public Error {
 public:
  explicit TheoremFalsified(const std::string& what) : Error("theorem falsified: " + what) {}
  ExitCode exit_code() const noexcept override { return ExitCode::theorem_falsified; }
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public PreconditionError {
 public:
  DegreeMismatch(std::size_t a, std::size_t b)
      : PreconditionError("degree mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace quandle
