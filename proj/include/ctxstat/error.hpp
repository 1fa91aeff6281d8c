#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ctxstat {

enum class ErrorKind {
  Usage,
  UnknownObservable,
  EmptyPairData,
  ZeroConditioningRow,
  PairMismatch,
  InconsistentOrientations,
  InvalidInput,
  ProblemTooLarge,
  SolverFailure,
  TooFewObservables,
  SampleExceedsPopulation,
  ParseError,
  NonBinaryValue,
  HeaderMismatch,
  Io,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failures carry a 1-based position.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t line, std::size_t column, const std::string& message)
      : Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                        message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ctxstat
