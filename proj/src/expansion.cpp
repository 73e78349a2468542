#include "puiseux/expansion.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "puiseux/error.hpp"
#include "puiseux/solver.hpp"
#include "puiseux/tropical.hpp"

namespace puiseux {

bool OmegaSet::all_infinite() const {
  return std::all_of(eta.begin(), eta.end(), [](const Val& v) { return v.is_infinite(); });
}

void validate(const OmegaSet& d, const WeightMatrix& w) {
  const std::size_t m = d.eta.size();
  if (d.gamma.size() != m || d.c.size() != m)
    throw Error(ErrorCode::InvalidOmegaSet, "eta, Gamma and c have different lengths");
  for (std::size_t i = 0; i < m; ++i) {
    if (d.eta[i].is_infinite()) {
      if (d.gamma[i] || sgn(d.c[i]) != 0)
        throw Error(ErrorCode::InvalidOmegaSet, "infinite coordinate with finite data");
      continue;
    }
    if (!d.gamma[i] || sgn(d.c[i]) == 0)
      throw Error(ErrorCode::InvalidOmegaSet, "finite coordinate needs a Gamma row and c != 0");
    if (w.value_of(*d.gamma[i]) != d.eta[i])
      throw Error(ErrorCode::InvalidOmegaSet, "W Gamma_i differs from eta_i");
  }
}

OmegaSet defining_data(const std::vector<LPoly>& m, const WeightMatrix& w) {
  OmegaSet d;
  for (const auto& mi : m) {
    if (mi.is_zero()) {
      d.eta.push_back(Val::infinity());
      d.gamma.emplace_back(std::nullopt);
      d.c.emplace_back(0);
      continue;
    }
    if (!mi.is_monomial() || !mi.is_x_only())
      throw Error(ErrorCode::InvalidArgument, "defining data needs x-only monomials");
    const Term& t = mi.terms().front();
    d.eta.push_back(w.value_of(t.xexp));
    d.gamma.emplace_back(t.xexp);
    d.c.push_back(t.coeff);
  }
  return d;
}

std::vector<LPoly> mtuple_of(const OmegaSet& d, std::size_t n) {
  const std::size_t m = d.eta.size();
  std::vector<LPoly> out;
  for (std::size_t i = 0; i < m; ++i) {
    if (!d.gamma[i] || sgn(d.c[i]) == 0)
      out.emplace_back(n, m);
    else
      out.push_back(LPoly::x_monomial(d.c[i], *d.gamma[i], m));
  }
  return out;
}

unsigned long d_gamma(const std::vector<std::optional<ExpVec>>& gamma) {
  std::vector<Rat> entries;
  for (const auto& row : gamma)
    if (row) entries.insert(entries.end(), row->begin(), row->end());
  mpz_class l = lcm_of_denominators(entries);
  if (!l.fits_ulong_p()) throw Error(ErrorCode::BudgetExceeded, "ramification index overflow");
  return l.get_ui();
}

SeriesSolution SeriesSolution::truncated(std::size_t k) const {
  SeriesSolution s = *this;
  for (auto& c : s.coords)
    c.erase(std::remove_if(c.begin(), c.end(), [k](const SeriesTerm& t) { return t.step >= k; }),
            c.end());
  if (s.trace.size() > k) s.trace.resize(k);
  s.exact = false;
  return s;
}

std::vector<LPoly> SeriesSolution::as_polys(std::size_t n, std::size_t m) const {
  std::vector<LPoly> out;
  for (const auto& c : coords) {
    std::vector<Term> terms;
    for (const auto& t : c) terms.push_back(Term{t.coeff, t.exp, YDeg(m, 0)});
    out.emplace_back(n, m, std::move(terms));
  }
  return out;
}

Branch Branch::initial(std::vector<LPoly> gens) {
  if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "no generators");
  Branch b;
  const std::size_t m = gens.front().ny();
  b.gens = std::move(gens);
  b.acc_terms.assign(m, {});
  b.retired.assign(m, false);
  return b;
}

std::string StartingSets::dead_reason() const {
  std::ostringstream os;
  if (candidates == 0) {
    os << "no prevariety candidate";
    if (underdetermined) os << " (" << underdetermined << " underdetermined tie loci)";
  } else if (rejected_not_increasing == candidates) {
    os << "strict increase violated by all " << candidates << " candidates";
  } else {
    os << "no rational torus solution";
    if (irrational_roots) os << " (irrational coefficients)";
    if (nonzero_dimensional) os << " (positive-dimensional initial system)";
  }
  return os.str();
}

namespace {

bool omega_less(const OmegaSet& a, const OmegaSet& b) {
  if (a.eta != b.eta)
    return std::lexicographical_compare(a.eta.begin(), a.eta.end(), b.eta.begin(), b.eta.end());
  return a.c < b.c;
}

bool strictly_above(const EtaVec& eta, const EtaVec& floor) {
  if (floor.empty()) return true;
  for (std::size_t i = 0; i < eta.size(); ++i)
    if (eta[i].is_finite() && !(eta[i] > floor[i])) return false;
  return true;
}

}  // namespace

StartingSets starting_sets(const Branch& branch, const WeightMatrix& w, const ExpandOptions& opts) {
  StartingSets out;
  const std::size_t m = branch.retired.size();
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < m; ++i)
    if (!branch.retired[i]) active.push_back(i);
  if (active.size() >= std::numeric_limits<unsigned>::digits)
    throw Error(ErrorCode::BudgetExceeded, "too many y variables");
  const bool positive = opts.positive_only && branch.step == 0;

  for (unsigned long mask = 0; mask < (1ul << active.size()); ++mask) {
    std::vector<std::size_t> lambda;
    for (std::size_t k = 0; k < active.size(); ++k)
      if (mask & (1ul << k)) lambda.push_back(active[k]);
    CandidateSet cs = candidate_etas(branch.gens, w, lambda, positive);
    out.underdetermined += cs.underdetermined;
    for (const auto& eta : cs.etas) {
      ++out.candidates;
      if (!strictly_above(eta, branch.floor)) {
        ++out.rejected_not_increasing;
        continue;
      }
      std::vector<LPoly> system;
      for (const auto& g : branch.gens) {
        LPoly s = eval_x_one(in_w_eta(g, w, eta));
        if (!s.is_zero()) system.push_back(std::move(s));
      }
      TorusSolutionSet ts = torus_solutions(system, lambda, opts.max_groebner_pairs);
      out.irrational_roots = out.irrational_roots || ts.irrational_roots_detected;
      out.nonzero_dimensional = out.nonzero_dimensional || ts.nonzero_dimensional;
      for (const auto& sol : ts.solutions) {
        OmegaSet d;
        d.eta = eta;
        d.gamma.assign(m, std::nullopt);
        d.c.assign(m, Rat(0));
        for (std::size_t k = 0; k < lambda.size(); ++k) {
          d.gamma[lambda[k]] = w.solve(eta[lambda[k]]);
          d.c[lambda[k]] = sol[k];
        }
        validate(d, w);
        out.sets.push_back(std::move(d));
      }
    }
  }
  std::sort(out.sets.begin(), out.sets.end(), omega_less);
  return out;
}

Branch recenter(const Branch& branch, const OmegaSet& d, const WeightMatrix& w) {
  validate(d, w);
  if (!strictly_above(d.eta, branch.floor))
    throw std::logic_error("eta " + to_string(d.eta) + " does not strictly increase over " +
                           to_string(branch.floor));
  const std::size_t m = d.eta.size();
  const std::size_t n = w.cols();
  const unsigned long k = d_gamma(d.gamma);
  if (k > std::numeric_limits<unsigned>::max())
    throw Error(ErrorCode::BudgetExceeded, "ramification index overflow");

  OmegaSet scaled = d;
  for (std::size_t i = 0; i < m; ++i)
    if (scaled.gamma[i]) scaled.gamma[i] = Rat(k) * *scaled.gamma[i];
  const auto shift = mtuple_of(scaled, n);

  std::vector<std::size_t> newly_retired;
  for (std::size_t i = 0; i < m; ++i)
    if (d.eta[i].is_infinite() && !branch.retired[i]) newly_retired.push_back(i);

  Branch next;
  for (const auto& g : branch.gens) {
    LPoly r = subs_shift(subs_ramify(g, static_cast<unsigned>(k)), shift).retire(newly_retired);
    if (!r.is_zero()) next.gens.push_back(std::move(r));
  }
  if (next.gens.empty()) next.gens.emplace_back(n, m);
  next.step = branch.step + 1;
  next.cum_ram = branch.cum_ram * k;
  next.acc_terms = branch.acc_terms;
  next.retired = branch.retired;
  for (std::size_t i : newly_retired) next.retired[i] = true;
  const Rat inv_cum(1, branch.cum_ram);
  for (std::size_t i = 0; i < m; ++i)
    if (d.gamma[i]) next.acc_terms[i].push_back(SeriesTerm{d.c[i], inv_cum * *d.gamma[i], branch.step});
  next.history = branch.history;
  next.history.push_back(TraceStep{d, k});
  next.floor.assign(m, Val::infinity());
  for (std::size_t i = 0; i < m; ++i)
    if (d.eta[i].is_finite()) next.floor[i] = d.eta[i].scaled(Rat(k), w.rows());
  return next;
}

Val verify(const std::vector<LPoly>& gens, const SeriesSolution& solution, const WeightMatrix& w) {
  Val best = Val::infinity();
  for (const auto& g : gens) {
    auto s = solution.as_polys(g.nx(), g.ny());
    LPoly residual = eval_series(g, s);
    Val v = ord_w_eta(residual, w, EtaVec(g.ny(), Val::infinity()));
    if (v < best) best = std::move(v);
  }
  return best;
}

namespace {

SeriesSolution make_solution(const Branch& b, bool exact, const std::vector<LPoly>& gens,
                             const WeightMatrix& w) {
  SeriesSolution s;
  s.coords = b.acc_terms;
  s.ramification_index = b.cum_ram;
  s.exact = exact;
  s.trace = b.history;
  s.residual_order = verify(gens, s, w);
  if (exact && s.residual_order.is_finite())
    throw std::logic_error("exact branch leaves a nonzero residual");
  return s;
}

bool y_zero_solves(const Branch& b) {
  return std::all_of(b.gens.begin(), b.gens.end(),
                     [](const LPoly& g) { return g.y_free_part().is_zero(); });
}

}  // namespace

ExpansionResult expand(const std::vector<LPoly>& gens, const WeightMatrix& w, const ExpandOptions& opts) {
  if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "no generators");
  for (const auto& g : gens) {
    if (g.nx() != w.cols()) throw Error(ErrorCode::DimensionMismatch, "generator N differs from W");
    if (g.ny() != gens.front().ny()) throw Error(ErrorCode::DimensionMismatch, "generators differ in M");
  }
  ExpansionResult result;
  auto emit = [&](SeriesSolution s) {
    if (std::find(result.solutions.begin(), result.solutions.end(), s) == result.solutions.end())
      result.solutions.push_back(std::move(s));
  };

  std::vector<Branch> frontier{Branch::initial(gens)};
  while (!frontier.empty()) {
    std::vector<Branch> next;
    for (const auto& b : frontier) {
      if (b.step >= opts.max_terms) {
        emit(make_solution(b, y_zero_solves(b), gens, w));
        continue;
      }
      StartingSets ss = starting_sets(b, w, opts);
      if (ss.irrational_roots)
        result.diagnostics.push_back("step " + std::to_string(b.step) +
                                     ": branches with irrational coefficients pruned");
      if (ss.nonzero_dimensional)
        result.diagnostics.push_back("step " + std::to_string(b.step) +
                                     ": positive-dimensional initial system skipped");
      if (ss.underdetermined)
        result.diagnostics.push_back("step " + std::to_string(b.step) + ": " +
                                     std::to_string(ss.underdetermined) +
                                     " underdetermined tie loci not expanded");
      if (ss.sets.empty()) {
        result.dead.push_back(DeadBranch{b.history, b.acc_terms, ss.dead_reason()});
        result.diagnostics.push_back("step " + std::to_string(b.step) + ": dead branch, " +
                                     ss.dead_reason());
        continue;
      }
      for (const auto& d : ss.sets) {
        if (d.all_infinite())
          emit(make_solution(b, true, gens, w));
        else
          next.push_back(recenter(b, d, w));
      }
    }
    if (next.size() > opts.max_branches)
      throw Error(ErrorCode::BranchBudgetExceeded,
                  std::to_string(next.size()) + " live branches exceed the limit of " +
                      std::to_string(opts.max_branches));
    frontier = std::move(next);
  }
  if (result.solutions.empty())
    result.diagnostics.push_back("all branches dead: the system may not be N-admissible, or every "
                                 "branch needs irrational coefficients");
  return result;
}

}  // namespace puiseux
