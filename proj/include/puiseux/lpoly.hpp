#pragma once

#include <string>
#include <vector>

#include "puiseux/rational.hpp"
#include "puiseux/value.hpp"

namespace puiseux {

/// One term coeff * x^xexp * y^ydeg, coeff nonzero.
struct Term {
  Rat coeff;
  ExpVec xexp;
  YDeg ydeg;

  bool operator==(const Term&) const = default;
};

/// Sparse Laurent-Puiseux polynomial in K[x*, y]: rational exponents in x
/// (any sign), nonnegative integer exponents in y.
///
/// Terms are kept sorted by (xexp, ydeg) as plain tuples with no repeated
/// keys and no zero coefficients, so equal polynomials compare equal
/// regardless of any weight.
class LPoly {
 public:
  LPoly() = default;
  LPoly(std::size_t n, std::size_t m) : n_(n), m_(m) {}
  /// Normalizes: merges equal keys and drops zero coefficients.
  LPoly(std::size_t n, std::size_t m, std::vector<Term> terms);

  static LPoly constant(std::size_t n, std::size_t m, const Rat& c);
  static LPoly x_monomial(const Rat& c, ExpVec xexp, std::size_t m);
  static LPoly y_var(std::size_t n, std::size_t m, std::size_t i);

  std::size_t nx() const noexcept { return n_; }
  std::size_t ny() const noexcept { return m_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  /// No term contains a y variable.
  bool is_x_only() const;

  LPoly operator+(const LPoly& g) const;
  LPoly operator-(const LPoly& g) const;
  LPoly operator-() const;
  LPoly operator*(const LPoly& g) const;
  LPoly scaled(const Rat& k) const;
  LPoly pow(unsigned e) const;

  bool operator==(const LPoly&) const = default;

  /// Terms with y-degree zero.
  LPoly y_free_part() const;

  /// Sets y_i = 0 for each listed i.
  LPoly retire(const std::vector<std::size_t>& ys) const;

  /// Pretty form using the given variable names, e.g. "y1^2 - x1*x2".
  std::string str(const std::vector<std::string>& xnames,
                  const std::vector<std::string>& ynames) const;
  /// Pretty form with default names x1.., y1..
  std::string str() const;

 private:
  void normalize();

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<Term> terms_;
};

/// (omega, eta)-value of a single term: W.a + eta.b with inf*0 = 0.
Val term_value(const Term& t, const WeightMatrix& w, const EtaVec& eta);

/// min over terms of W.a + eta.b; infinity for f = 0 or when every term
/// contains a y_i with eta_i infinite.
Val ord_w_eta(const LPoly& f, const WeightMatrix& w, const EtaVec& eta);

/// Sum of the terms attaining ord_w_eta; zero when the order is infinite.
LPoly in_w_eta(const LPoly& f, const WeightMatrix& w, const EtaVec& eta);

/// x -> x^k (every x exponent multiplied by k).
LPoly subs_ramify(const LPoly& f, unsigned k);

/// y_i -> y_i + m_i where each m_i is an x-only polynomial (typically a
/// monomial or zero).
LPoly subs_shift(const LPoly& f, const std::vector<LPoly>& m);

/// x -> (1, ..., 1), leaving a polynomial in y only.
LPoly eval_x_one(const LPoly& f);

/// y_i -> s_i with x-only s_i; returns the x-only residual.
LPoly eval_series(const LPoly& f, const std::vector<LPoly>& s);

}  // namespace puiseux
