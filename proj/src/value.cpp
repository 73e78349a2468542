#include "puiseux/value.hpp"

#include <sstream>

#include "puiseux/error.hpp"
#include "puiseux/linalg.hpp"

namespace puiseux {

bool Val::is_positive() const {
  if (inf_) return true;
  for (const auto& c : coords_) {
    int s = sgn(c);
    if (s != 0) return s > 0;
  }
  return false;
}

Val Val::operator+(const Val& other) const {
  if (inf_ || other.inf_) return infinity();
  if (coords_.size() != other.coords_.size())
    throw Error(ErrorCode::DimensionMismatch, "value dimension mismatch");
  std::vector<Rat> r(coords_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coords_[i] + other.coords_[i];
  return Val(std::move(r));
}

Val Val::operator-() const {
  if (inf_) throw Error(ErrorCode::InvalidArgument, "negating infinity");
  std::vector<Rat> r(coords_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = -coords_[i];
  return Val(std::move(r));
}

Val Val::scaled(const Rat& k, std::size_t d) const {
  if (inf_) {
    if (sgn(k) == 0) return zero(d);
    return infinity();
  }
  std::vector<Rat> r(coords_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = k * coords_[i];
  return Val(std::move(r));
}

bool Val::operator==(const Val& other) const {
  if (inf_ || other.inf_) return inf_ == other.inf_;
  return coords_ == other.coords_;
}

std::strong_ordering Val::operator<=>(const Val& other) const {
  if (inf_ || other.inf_) {
    if (inf_ == other.inf_) return std::strong_ordering::equal;
    return inf_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (coords_.size() != other.coords_.size())
    throw Error(ErrorCode::DimensionMismatch, "value dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    int c = cmp(coords_[i], other.coords_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Val::str() const {
  if (inf_) return "inf";
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i].get_str();
  os << ')';
  return os.str();
}

std::strong_ordering val_cmp(const Val& u, const Val& v) { return u <=> v; }

WeightMatrix::WeightMatrix(std::vector<std::vector<Rat>> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw Error(ErrorCode::DimensionMismatch, "weight matrix has no rows");
  cols_ = rows_.front().size();
  if (cols_ == 0) throw Error(ErrorCode::DimensionMismatch, "weight matrix has no columns");
  for (const auto& r : rows_)
    if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged weight matrix");
  if (rows_.size() < cols_ || rank(rows_) != cols_)
    throw Error(ErrorCode::RankDeficient,
                "weight matrix must have rank " + std::to_string(cols_));
}

WeightMatrix WeightMatrix::identity(std::size_t n) {
  std::vector<std::vector<Rat>> rows(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return WeightMatrix(std::move(rows));
}

Val WeightMatrix::value_of(const ExpVec& a) const {
  if (a.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "exponent length differs from N");
  std::vector<Rat> v(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn(a[j]) != 0) v[i] += rows_[i][j] * a[j];
  return Val(std::move(v));
}

ExpVec WeightMatrix::solve(const Val& v) const {
  if (v.is_infinite()) throw Error(ErrorCode::InvalidArgument, "cannot solve for an infinite value");
  if (v.dim() != rows_.size()) throw Error(ErrorCode::DimensionMismatch, "value length differs from d");
  EchelonSystem sys(cols_, 1);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (sys.add_row(rows_[i], {v.coords()[i]}) == EchelonSystem::AddResult::Inconsistent)
      throw Error(ErrorCode::NotInImage, "value " + v.str() + " is not in the image of W");
  }
  auto x = sys.solution();
  ExpVec g(cols_);
  for (std::size_t j = 0; j < cols_; ++j) g[j] = (*x)[j][0];
  return g;
}

std::vector<std::size_t> finite_support(const EtaVec& eta) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < eta.size(); ++i)
    if (eta[i].is_finite()) out.push_back(i);
  return out;
}

std::string to_string(const EtaVec& eta) {
  std::string s = "[";
  for (std::size_t i = 0; i < eta.size(); ++i) s += (i ? ", " : "") + eta[i].str();
  return s + "]";
}

}  // namespace puiseux
