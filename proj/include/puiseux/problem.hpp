#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "puiseux/expansion.hpp"
#include "puiseux/lpoly.hpp"
#include "puiseux/value.hpp"

namespace puiseux {

/// A parsed problem file.
///
///   # comment
///   vars x1 x2 y1          x variables first, then y variables
///   weight 1 0             one row per line; N is the row length
///   weight 0 1
///   gen y1^2 - x1*x2       one generator per line
///   opt max_terms 4        max_terms, max_branches, positive_only,
///                          max_groebner_pairs
///
/// Without weight lines, the leading variables whose names start with 'x'
/// are the x variables and W is the identity.
struct ProblemSpec {
  std::vector<std::string> xnames;
  std::vector<std::string> ynames;
  WeightMatrix weight = WeightMatrix::identity(1);
  std::vector<LPoly> gens;
  ExpandOptions options;

  std::size_t n() const { return xnames.size(); }
  std::size_t m() const { return ynames.size(); }
};

/// Throws ParseError (with line and column) or Error(RankDeficient).
ProblemSpec parse_problem(std::string_view text);

/// Parses one polynomial expression over the given variables.
LPoly parse_polynomial(std::string_view expr, const std::vector<std::string>& xnames,
                       const std::vector<std::string>& ynames);

}  // namespace puiseux
