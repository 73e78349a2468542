#pragma once

#include <cstddef>
#include <vector>

#include "puiseux/lpoly.hpp"
#include "puiseux/rational.hpp"

namespace puiseux {

/// Sparse polynomial over Q in k variables with lex order v0 > v1 > ... .
/// Terms are kept sorted with the leading monomial first.
class MPoly {
 public:
  using Mono = std::vector<int>;
  struct Entry {
    Mono mono;
    Rat coeff;
    bool operator==(const Entry&) const = default;
  };

  MPoly() = default;
  explicit MPoly(std::size_t vars) : vars_(vars) {}
  MPoly(std::size_t vars, std::vector<Entry> entries);

  static MPoly constant(std::size_t vars, const Rat& c);

  std::size_t vars() const noexcept { return vars_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }
  bool is_constant() const;
  const Mono& lead_mono() const { return entries_.front().mono; }
  const Rat& lead_coeff() const { return entries_.front().coeff; }

  MPoly operator+(const MPoly& g) const;
  MPoly operator-(const MPoly& g) const;
  MPoly mul_term(const Rat& c, const Mono& m) const;
  MPoly monic() const;

  /// Highest variable index with positive degree, or -1 for constants.
  int max_var() const;
  /// Variables actually used.
  std::vector<bool> support() const;

  /// Substitute variable `var` = value, returning a polynomial in vars-1
  /// variables (that variable removed).
  MPoly specialize(std::size_t var, const Rat& value) const;

  Rat eval(const std::vector<Rat>& point) const;

  bool operator==(const MPoly&) const = default;

 private:
  void normalize();

  std::size_t vars_ = 0;
  std::vector<Entry> entries_;
};

/// Full reduction of f modulo g (first reducer found wins).
MPoly reduce(const MPoly& f, const std::vector<MPoly>& basis);

/// Reduced lex Groebner basis sorted by ascending leading monomial.
/// {1} iff the system is inconsistent; {} for the zero ideal.
/// Throws Error(BudgetExceeded) after `max_pairs` S-pair reductions.
std::vector<MPoly> buchberger_lex(const std::vector<MPoly>& system, std::size_t max_pairs = 20000);

/// Converts x-free LPolys to MPolys in the listed y variables (in order).
/// Throws if a polynomial has x-dependence or uses other y variables.
std::vector<MPoly> to_mpolys(const std::vector<LPoly>& system, const std::vector<std::size_t>& ys);

/// Distinct nonzero rational roots of a univariate polynomial given by its
/// coefficients (index = degree), ascending. `irrational` is set when a
/// factor of positive degree without rational roots remains.
std::vector<Rat> rational_roots(const std::vector<Rat>& coeffs, bool& irrational);

struct TorusSolutionSet {
  std::vector<std::vector<Rat>> solutions;  // sorted, all entries nonzero
  bool nonzero_dimensional = false;
  bool irrational_roots_detected = false;
};

/// All solutions in (Q*)^k of the system in k variables.
TorusSolutionSet torus_solutions(const std::vector<MPoly>& system, std::size_t vars,
                                 std::size_t max_pairs = 20000);

/// Convenience overload for y-polynomials in the listed variables.
TorusSolutionSet torus_solutions(const std::vector<LPoly>& system, const std::vector<std::size_t>& ys,
                                 std::size_t max_pairs = 20000);

}  // namespace puiseux
