#include "puiseux/error.hpp"

namespace puiseux {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "dimension mismatch";
    case ErrorCode::RankDeficient: return "rank deficient weight matrix";
    case ErrorCode::NotInImage: return "value not in the image of the weight matrix";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::InvalidOmegaSet: return "invalid omega-set";
    case ErrorCode::BudgetExceeded: return "budget exceeded";
    case ErrorCode::BranchBudgetExceeded: return "branch budget exceeded";
    case ErrorCode::InvalidArgument: return "invalid argument";
  }
  return "unknown error";
}

ParseError::ParseError(const std::string& msg, int line, int column)
    : Error(ErrorCode::Parse,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

}  // namespace puiseux
