#include "puiseux/linalg.hpp"

#include "puiseux/error.hpp"

namespace puiseux {

std::size_t rank(std::vector<std::vector<Rat>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (sgn(rows[i][c]) == 0) continue;
      Rat f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

EchelonSystem::EchelonSystem(std::size_t unknowns, std::size_t rhs_cols)
    : unknowns_(unknowns), rhs_cols_(rhs_cols) {}

EchelonSystem::AddResult EchelonSystem::add_row(std::vector<Rat> coeffs, std::vector<Rat> rhs) {
  if (coeffs.size() != unknowns_ || rhs.size() != rhs_cols_)
    throw Error(ErrorCode::DimensionMismatch, "echelon row has wrong shape");
  for (const auto& row : rows_) {
    if (sgn(coeffs[row.pivot]) == 0) continue;
    Rat f = coeffs[row.pivot];
    for (std::size_t j = 0; j < unknowns_; ++j) coeffs[j] -= f * row.coeffs[j];
    for (std::size_t j = 0; j < rhs_cols_; ++j) rhs[j] -= f * row.rhs[j];
  }
  std::size_t pivot = 0;
  while (pivot < unknowns_ && sgn(coeffs[pivot]) == 0) ++pivot;
  if (pivot == unknowns_) {
    for (const auto& v : rhs)
      if (sgn(v) != 0) return AddResult::Inconsistent;
    return AddResult::Redundant;
  }
  Rat inv = 1 / coeffs[pivot];
  for (auto& v : coeffs) v *= inv;
  for (auto& v : rhs) v *= inv;
  // Clear the new pivot column from the existing rows.
  for (auto& row : rows_) {
    if (sgn(row.coeffs[pivot]) == 0) continue;
    Rat f = row.coeffs[pivot];
    for (std::size_t j = 0; j < unknowns_; ++j) row.coeffs[j] -= f * coeffs[j];
    for (std::size_t j = 0; j < rhs_cols_; ++j) row.rhs[j] -= f * rhs[j];
  }
  Row nr{pivot, std::move(coeffs), std::move(rhs)};
  auto it = rows_.begin();
  while (it != rows_.end() && it->pivot < pivot) ++it;
  rows_.insert(it, std::move(nr));
  return AddResult::Independent;
}

std::optional<std::vector<std::vector<Rat>>> EchelonSystem::solution() const {
  if (!determined()) return std::nullopt;
  std::vector<std::vector<Rat>> x(unknowns_);
  for (const auto& row : rows_) x[row.pivot] = row.rhs;
  return x;
}

}  // namespace puiseux
