#pragma once

#include <stdexcept>
#include <string>

namespace puiseux {

enum class ErrorCode {
  DimensionMismatch,
  RankDeficient,
  NotInImage,
  Parse,
  InvalidOmegaSet,
  BudgetExceeded,
  BranchBudgetExceeded,
  InvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace puiseux
