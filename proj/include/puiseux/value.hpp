#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "puiseux/rational.hpp"

namespace puiseux {

/// A value w.a of an exponent under the weight, or infinity.
///
/// Finite values are vectors in Q^d compared lexicographically. The first
/// row of the weight matrix is the "real" weight; later rows only break ties.
class Val {
 public:
  Val() = default;
  explicit Val(std::vector<Rat> coords) : coords_(std::move(coords)) {}

  static Val infinity() {
    Val v;
    v.inf_ = true;
    return v;
  }
  static Val zero(std::size_t d) { return Val(std::vector<Rat>(d)); }

  bool is_infinite() const noexcept { return inf_; }
  bool is_finite() const noexcept { return !inf_; }
  std::size_t dim() const noexcept { return coords_.size(); }
  const std::vector<Rat>& coords() const { return coords_; }

  /// Strictly greater than the zero vector (lexicographically). Infinity is
  /// positive.
  bool is_positive() const;

  Val operator+(const Val& other) const;
  Val operator-() const;
  /// Integer multiple with the convention inf*0 = 0 and inf*k = inf.
  Val scaled(const Rat& k, std::size_t d) const;

  bool operator==(const Val& other) const;
  std::strong_ordering operator<=>(const Val& other) const;

  std::string str() const;

 private:
  std::vector<Rat> coords_;
  bool inf_ = false;
};

std::strong_ordering val_cmp(const Val& u, const Val& v);

/// A d x N rational matrix of rank N. Injectivity of a -> Wa makes the
/// induced order on Q^N total and tie free.
class WeightMatrix {
 public:
  /// Throws Error(RankDeficient) or Error(DimensionMismatch).
  explicit WeightMatrix(std::vector<std::vector<Rat>> rows);

  static WeightMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<std::vector<Rat>>& data() const { return rows_; }

  Val value_of(const ExpVec& a) const;

  /// The unique g with W g = v. Throws Error(NotInImage) if inconsistent.
  ExpVec solve(const Val& v) const;

  bool operator==(const WeightMatrix&) const = default;

 private:
  std::vector<std::vector<Rat>> rows_;
  std::size_t cols_ = 0;
};

inline Val val_of_exp(const WeightMatrix& w, const ExpVec& a) { return w.value_of(a); }
inline ExpVec solve_gamma_row(const WeightMatrix& w, const Val& v) { return w.solve(v); }

/// Weight of the y variables; entries may be infinite.
using EtaVec = std::vector<Val>;

/// Indices i with eta_i finite.
std::vector<std::size_t> finite_support(const EtaVec& eta);

std::string to_string(const EtaVec& eta);

}  // namespace puiseux
