#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace vsrc {

// Process exit codes, shared between the library error types and the CLI.
enum class ExitCode : int {
  ok = 0,
  invalid = 1,   // semantic failure: invalid coloring, failed experiment rows
  parse = 2,     // malformed input files or parameters
  budget = 3,    // search/node budget exhausted
  internal = 4,  // violated internal invariant
};

class Error : public std::runtime_error {
 public:
  Error(ExitCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  ExitCode exit_code() const { return code_; }

 private:
  ExitCode code_;
};

class ParseError : public Error {
 public:
  enum class Kind {
    malformed_line,
    self_loop,
    duplicate_edge,
    disconnected,
    incomplete_coloring,
    bad_parameters,
    other,
  };

  ParseError(Kind kind, std::string message)
      : Error(ExitCode::parse, std::move(message)), kind_(kind) {}
  explicit ParseError(std::string message)
      : ParseError(Kind::other, std::move(message)) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class BudgetError : public Error {
 public:
  explicit BudgetError(std::string message)
      : Error(ExitCode::budget, std::move(message)) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(std::string message)
      : Error(ExitCode::internal, std::move(message)) {}
};

// Inputs that parse but cannot be processed as requested, e.g. asking for the
// cactus method on a graph that is not a cactus.
class InvalidInputError : public Error {
 public:
  explicit InvalidInputError(std::string message)
      : Error(ExitCode::invalid, std::move(message)) {}
};

}  // namespace vsrc
