#pragma once

#include <vector>

#include "puiseux/lpoly.hpp"
#include "puiseux/value.hpp"

namespace puiseux {

/// Candidate weights for one choice of finite coordinates.
struct CandidateSet {
  std::vector<EtaVec> etas;  // sorted, deduplicated
  /// Pair systems whose tie locus stayed positive dimensional and could not
  /// be completed to an isolated point. These are reported, not expanded.
  std::size_t underdetermined = 0;
};

/// Enumerates eta with finite entries exactly on `lambda` such that (W, eta)
/// is in the tropical prevariety of `gens`: every generator, after setting
/// y_i = 0 off `lambda`, has an initial form with at least two terms.
///
/// Each candidate is the unique solution of a stack of tie equations
/// eta.(b - b') = W(a' - a), one or more pairs per generator, and is then
/// validated against all generators. With `positive_only` every entry must be
/// lexicographically positive.
CandidateSet candidate_etas(const std::vector<LPoly>& gens, const WeightMatrix& w,
                            const std::vector<std::size_t>& lambda, bool positive_only);

/// Generator-level prevariety test: after retiring the infinite coordinates,
/// every nonzero generator has a non-monomial initial form.
bool is_prevariety_point(const std::vector<LPoly>& gens, const WeightMatrix& w,
                         const EtaVec& eta);

}  // namespace puiseux
