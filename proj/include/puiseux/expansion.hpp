#pragma once

#include <optional>
#include <string>
#include <vector>

#include "puiseux/lpoly.hpp"
#include "puiseux/value.hpp"

namespace puiseux {

/// First-term data {eta, Gamma, c} of an M-tuple of monomials c_i x^Gamma_i.
/// Row i of Gamma is absent (infinite) exactly when eta_i is infinite, and
/// then c_i = 0; otherwise W Gamma_i = eta_i and c_i != 0.
struct OmegaSet {
  EtaVec eta;
  std::vector<std::optional<ExpVec>> gamma;
  std::vector<Rat> c;

  bool operator==(const OmegaSet&) const = default;
  bool all_infinite() const;
};

/// Throws Error(InvalidOmegaSet) when the invariants above do not hold.
void validate(const OmegaSet& d, const WeightMatrix& w);

/// Defining data of a tuple of x-only monomials (zero entries allowed).
OmegaSet defining_data(const std::vector<LPoly>& m, const WeightMatrix& w);

/// The tuple c_i x^Gamma_i as x-only polynomials in n x-variables.
std::vector<LPoly> mtuple_of(const OmegaSet& d, std::size_t n);

/// lcm of the denominators of the finite Gamma entries.
unsigned long d_gamma(const std::vector<std::optional<ExpVec>>& gamma);

struct SeriesTerm {
  Rat coeff;
  ExpVec exp;        // exponent in the original x variables
  std::size_t step;  // expansion step that produced the term

  bool operator==(const SeriesTerm&) const = default;
};

struct TraceStep {
  OmegaSet set;
  unsigned long d_gamma = 1;

  bool operator==(const TraceStep&) const = default;
};

struct SeriesSolution {
  std::vector<std::vector<SeriesTerm>> coords;
  unsigned long ramification_index = 1;
  bool exact = false;
  Val residual_order = Val::infinity();
  std::vector<TraceStep> trace;

  bool operator==(const SeriesSolution&) const = default;

  /// Keeps the terms of the first k steps.
  SeriesSolution truncated(std::size_t k) const;
  /// Each coordinate as an x-only polynomial in the ring (n, m).
  std::vector<LPoly> as_polys(std::size_t n, std::size_t m) const;
};

/// Driver state for one branch of the expansion tree.
struct Branch {
  std::vector<LPoly> gens;  // current ideal, retired y already set to 0
  std::size_t step = 0;
  unsigned long cum_ram = 1;
  std::vector<std::vector<SeriesTerm>> acc_terms;
  std::vector<bool> retired;
  std::vector<TraceStep> history;
  EtaVec floor;  // d_gamma * eta of the previous step; empty at step 0

  static Branch initial(std::vector<LPoly> gens);
};

struct ExpandOptions {
  std::size_t max_terms = 4;
  std::size_t max_branches = 64;
  bool positive_only = true;
  std::size_t max_groebner_pairs = 20000;
};

struct StartingSets {
  std::vector<OmegaSet> sets;  // canonical order
  std::size_t candidates = 0;
  std::size_t rejected_not_increasing = 0;
  std::size_t underdetermined = 0;
  bool irrational_roots = false;
  bool nonzero_dimensional = false;

  std::string dead_reason() const;
};

StartingSets starting_sets(const Branch& branch, const WeightMatrix& w, const ExpandOptions& opts);

/// x -> x^dGamma, y -> y + M_D(x^dGamma), then retires the coordinates that
/// are infinite in D. Throws std::logic_error if D does not strictly
/// increase eta over the branch floor.
Branch recenter(const Branch& branch, const OmegaSet& d, const WeightMatrix& w);

struct DeadBranch {
  std::vector<TraceStep> trace;
  std::vector<std::vector<SeriesTerm>> partial_terms;
  std::string reason;
};

struct ExpansionResult {
  std::vector<SeriesSolution> solutions;
  std::vector<DeadBranch> dead;
  std::vector<std::string> diagnostics;
};

/// Breadth-first expansion of all branches. Throws
/// Error(BranchBudgetExceeded) if the frontier outgrows opts.max_branches.
ExpansionResult expand(const std::vector<LPoly>& gens, const WeightMatrix& w,
                       const ExpandOptions& opts = {});

/// Minimum order over the generators of the residual g(x, s(x)); infinity
/// when every residual vanishes.
Val verify(const std::vector<LPoly>& gens, const SeriesSolution& solution, const WeightMatrix& w);

}  // namespace puiseux
