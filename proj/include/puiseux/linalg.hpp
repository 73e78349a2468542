#pragma once

#include <optional>
#include <vector>

#include "puiseux/rational.hpp"

namespace puiseux {

/// Rank of a dense rational matrix.
std::size_t rank(std::vector<std::vector<Rat>> rows);

/// Incrementally built system A X = B over Q, with A having `unknowns`
/// columns and B having `rhs_cols` columns. Rows are kept in reduced echelon
/// form so that adding a row is cheap and copies are small.
class EchelonSystem {
 public:
  enum class AddResult { Independent, Redundant, Inconsistent };

  EchelonSystem(std::size_t unknowns, std::size_t rhs_cols);

  AddResult add_row(std::vector<Rat> coeffs, std::vector<Rat> rhs);

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t unknowns() const noexcept { return unknowns_; }
  bool determined() const noexcept { return rank() == unknowns_; }

  /// X as unknowns x rhs_cols, only when determined().
  std::optional<std::vector<std::vector<Rat>>> solution() const;

 private:
  struct Row {
    std::size_t pivot;
    std::vector<Rat> coeffs;
    std::vector<Rat> rhs;
  };
  std::size_t unknowns_;
  std::size_t rhs_cols_;
  std::vector<Row> rows_;  // sorted by pivot, fully reduced
};

}  // namespace puiseux
