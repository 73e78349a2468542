#pragma once

#include <string>
#include <vector>

#include "puiseux/expansion.hpp"
#include "puiseux/problem.hpp"

namespace puiseux {

/// Structured run report: problem echo, per-branch traces, solutions and
/// diagnostics. Rationals are "p/q" strings, values are arrays of rationals
/// and infinity is "inf". Output is deterministic for a given input.
std::string report_json(const ProblemSpec& spec, const ExpansionResult& result);

/// Human readable report.
std::string report_plain(const ProblemSpec& spec, const ExpansionResult& result);

/// Serializes solutions on their own (the "solutions" array of a report).
std::string solutions_json(const ProblemSpec& spec, const std::vector<SeriesSolution>& sols);

/// Reads solutions from a run report, a bare array of solutions, or a single
/// solution object. Throws ParseError on malformed input.
std::vector<SeriesSolution> parse_solutions(const ProblemSpec& spec, const std::string& text);

/// Renders a series coordinate, e.g. "x1 + 1/2*x1^2".
std::string series_str(const ProblemSpec& spec, const std::vector<SeriesTerm>& terms);

struct CheckEntry {
  Val residual_order;
  bool claimed_exact = false;
};

/// Re-verifies each solution against the problem's generators.
std::vector<CheckEntry> check_solutions(const ProblemSpec& spec, const std::vector<SeriesSolution>& sols);

std::string check_report_plain(const std::vector<CheckEntry>& entries);
std::string check_report_json(const std::vector<CheckEntry>& entries);

}  // namespace puiseux
