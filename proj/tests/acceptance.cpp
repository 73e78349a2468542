// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/brute_force.hpp"
#include "oracles/newton_polygon.hpp"
#include "puiseux/expansion.hpp"
#include "puiseux/problem.hpp"
#include "puiseux/solver.hpp"
#include "puiseux/tropical.hpp"
#include "support.hpp"

using namespace testing;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

const char* kCorpus[] = {"y^2 - x^2 - x^3", "y^2 - x^3", "y^3 - x^2", "(y - x)*(y - 2*x) + x^3",
                         "y^2 - x^2*(1 + x)"};

const std::vector<std::string> kX{"x"}, kY{"y"};

oracle::Plane plane_of(const LPoly& f) {
  oracle::Plane p;
  for (const auto& t : f.terms()) oracle::add_to(p, t.xexp[0], t.ydeg[0], t.coeff);
  return p;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<std::string> corpus_files() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(PUISEUX_DATA_DIR))
    if (e.path().extension() == ".pz") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

// 1
void plane_curve_oracle() {
  for (const char* text : kCorpus) {
    auto f = parse_polynomial(text, kX, kY);
    auto res = expand({f}, WeightMatrix::identity(1), {4});
    auto ref = oracle::newton_puiseux(plane_of(f), 4);
    std::set<std::string> got, want;
    for (const auto& s : res.solutions) {
      std::vector<std::pair<Rat, Rat>> terms;
      for (const auto& t : s.coords[0]) terms.emplace_back(t.coeff, t.exp[0]);
      std::string r = s.residual_order.is_infinite() ? "inf" : s.residual_order.coords()[0].get_str();
      got.insert(oracle::branch_key(terms) + (s.exact ? " exact" : " truncated") + " K=" +
                 std::to_string(s.ramification_index) + " r=" + r);
    }
    for (const auto& b : ref)
      want.insert(oracle::branch_key(b.terms) + (b.exact ? " exact" : " truncated") +
                  " K=" + b.ramification.get_str() + " r=" + (b.residual ? b.residual->get_str() : "inf"));
    require(!want.empty(), std::string("oracle found no branch for ") + text);
    require(got == want, std::string("branches differ for ") + text);
    require(res.solutions.size() == ref.size(), std::string("duplicate branches for ") + text);
  }
}

// 2
void ramified_exact() {
  auto spec = parse_problem(slurp(std::string(PUISEUX_DATA_DIR) + "/ramified.pz"));
  require(spec.weight == WeightMatrix::identity(2), "weight is not the identity");
  auto res = expand(spec.gens, spec.weight, spec.options);
  require(res.solutions.size() == 2, "expected two solutions");
  std::set<Rat> coeffs;
  for (const auto& s : res.solutions) {
    require(s.exact && s.residual_order.is_infinite(), "solution not exact");
    require(s.ramification_index == 2, "ramification index is not 2");
    require(s.coords[0].size() == 1 && s.coords[0][0].exp == ev({"1/2", "1/2"}), "wrong exponent");
    coeffs.insert(s.coords[0][0].coeff);
  }
  require(coeffs == std::set<Rat>{-1, 1}, "coefficients are not +-1");
}

// 3
void residual_growth() {
  auto f = parse_polynomial("y^2 - x^2*(1 + x)", kX, kY);
  auto w = WeightMatrix::identity(1);
  auto res = expand({f}, w, {4});
  require(res.solutions.size() == 2, "expected two branches");
  // x*sqrt(1 + x) = sum_k binom(1/2, k) x^(k+1)
  std::vector<Rat> binom{1};
  for (int k = 1; k < 4; ++k) binom.push_back(binom.back() * (Rat(1, 2) - (k - 1)) / k);
  for (const auto& s : res.solutions) {
    Rat sign = s.coords[0].front().coeff;
    require(s.coords[0].size() == 4, "expected four terms");
    for (int k = 0; k < 4; ++k) {
      require(s.coords[0][k].exp == ExpVec{Rat(k + 1)}, "exponent mismatch");
      require(s.coords[0][k].coeff == sign * binom[k], "coefficient differs from the binomial series");
    }
    Val prev = verify({f}, s.truncated(0), w);
    for (std::size_t k = 1; k <= 4; ++k) {
      Val cur = verify({f}, s.truncated(k), w);
      require(cur > prev, "residual order not increasing at k=" + std::to_string(k));
      prev = cur;
    }
    require(prev > w.value_of({5}), "4-term residual order does not exceed 5");
  }
}

// 4
void valuation_properties() {
  PolyGen gen(2024);
  int failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    auto w = gen.weight2();
    auto eta = gen.eta(2, 2, trial % 5 == 0);
    auto f = gen.lpoly(2, 2, 5), g = gen.lpoly(2, 2, 5);
    auto of = ord_w_eta(f, w, eta), og = ord_w_eta(g, w, eta);
    auto in_f = in_w_eta(f, w, eta);
    bool ok = ord_w_eta(f * g, w, eta) == of + og;
    ok = ok && in_w_eta(f * g, w, eta) == in_f * in_w_eta(g, w, eta);
    ok = ok && ord_w_eta(f + g, w, eta) >= std::min(of, og);
    ok = ok && in_w_eta(in_f, w, eta) == in_f;
    for (const auto& t : in_f.terms()) ok = ok && term_value(t, w, eta) == of;
    if (!ok) ++failures;
  }
  require(failures == 0, std::to_string(failures) + " of 1000 pairs failed");
}

// 5
void candidate_soundness() {
  PolyGen gen(77);
  std::size_t checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto w = gen.weight2();
    std::vector<LPoly> gens{gen.lpoly(2, 2, 4), gen.lpoly(2, 2, 4)};
    for (std::vector<std::size_t> lambda : {std::vector<std::size_t>{0, 1}, {0}, {1}, {}})
      for (const auto& eta : candidate_etas(gens, w, lambda, trial % 2 == 0).etas) {
        require(is_prevariety_point(gens, w, eta), "candidate is not a prevariety point");
        ++checked;
      }
  }
  require(checked > 0, "no candidates were produced");
  for (const char* text : kCorpus) {
    auto f = parse_polynomial(text, kX, kY);
    std::vector<Rat> want, got;
    for (const auto& mu : oracle::edge_slopes(plane_of(f)))
      if (mu > 0) want.push_back(mu);
    for (const auto& eta : candidate_etas({f}, WeightMatrix::identity(1), {0}, true).etas) {
      require(is_prevariety_point({f}, WeightMatrix::identity(1), eta), "corpus candidate fails prevariety test");
      got.push_back(eta[0].coords()[0]);
    }
    require(got == want, std::string("candidates differ from edge slopes for ") + text);
  }
}

// 6
void three_generator_example() {
  auto printed = parse_problem(slurp(std::string(PUISEUX_DATA_DIR) + "/three_gen_printed.pz"));
  const auto& w = printed.weight;
  std::vector<std::vector<Rat>> wraw = w.data();
  std::vector<oracle::RawPoly> raw_printed;
  for (const auto& g : printed.gens) {
    oracle::RawPoly r;
    for (const auto& t : g.terms()) r.push_back({t.coeff, t.xexp, t.ydeg});
    raw_printed.push_back(r);
  }
  struct Printed {
    ExpVec gamma;
    std::vector<Rat> c;
  };
  for (const auto& d : {Printed{ev({"1", "0"}), {1, 1, 0}}, Printed{ev({"0", "0"}), {q("1/3"), q("1/5"), 0}}}) {
    EtaVec eta{w.value_of(d.gamma), w.value_of(d.gamma), Val::infinity()};
    std::vector<LPoly> system;
    for (const auto& g : printed.gens) {
      auto s = eval_x_one(in_w_eta(g, w, eta));
      if (!s.is_zero()) system.push_back(s);
    }
    auto sols = torus_solutions(system, std::vector<std::size_t>{0, 1});
    require(sols.solutions.empty(), "printed eta admits a torus solution");
    oracle::MonomialTuple t{{d.gamma, d.gamma, std::nullopt}, d.c};
    bool all = true;
    for (const auto& g : raw_printed) all = all && oracle::cancels_lowest(g, wraw, t);
    require(!all, "printed starting set cancels under brute-force substitution");
  }
  auto d1 = EtaVec{w.value_of(ev({"1", "0"})), w.value_of(ev({"1", "0"})), Val::infinity()};
  {
    std::vector<LPoly> system;
    for (const auto& g : printed.gens) {
      auto s = eval_x_one(in_w_eta(g, w, d1));
      if (!s.is_zero()) system.push_back(s);
    }
    auto gb = buchberger_lex(to_mpolys(system, {0, 1}));
    require(gb.size() == 1 && gb[0].is_constant(), "first printed initial system is consistent");
  }
  auto res = expand(printed.gens, printed.weight, printed.options);
  require(res.solutions.empty(), "printed system produced solutions");
  require(!res.dead.empty() && !res.dead[0].reason.empty(), "no dead-branch diagnostics");

  auto fixed = parse_problem(slurp(std::string(PUISEUX_DATA_DIR) + "/three_gen_corrected.pz"));
  std::vector<oracle::RawPoly> raw_fixed;
  for (const auto& g : fixed.gens) {
    oracle::RawPoly r;
    for (const auto& t : g.terms()) r.push_back({t.coeff, t.xexp, t.ydeg});
    raw_fixed.push_back(r);
  }
  std::vector<std::vector<Rat>> exps;
  for (const char* a : {"0", "1/2", "1"})
    for (const char* b : {"0", "1/2", "1"}) exps.push_back(ev({a, b}));
  auto brute = oracle::brute_starting_sets(raw_fixed, wraw, 3, exps, oracle::small_rationals(3, 3));
  require(!brute.empty(), "brute force finds no starting set for the corrected system");
  std::set<std::pair<std::vector<std::optional<ExpVec>>, std::vector<Rat>>> want, got;
  for (const auto& t : brute) want.insert({t.gamma, t.c});
  for (const auto& d : starting_sets(Branch::initial(fixed.gens), w, fixed.options).sets) got.insert({d.gamma, d.c});
  require(got == want, "starting sets differ from the brute-force search");

  auto fr = expand(fixed.gens, fixed.weight, fixed.options);
  require(!fr.solutions.empty(), "corrected system has no branch");
  for (const auto& s : fr.solutions) {
    require(s.trace.size() >= 2, "corrected branch has fewer than two steps");
    for (std::size_t k = 1; k < s.trace.size(); ++k)
      for (std::size_t i = 0; i < 2; ++i)
        require(s.trace[k].set.eta[i] > s.trace[k - 1].set.eta[i].scaled(s.trace[k - 1].d_gamma, w.rows()),
                "eta does not increase along the corrected branch");
  }
}

// 7
void monotonicity() {
  std::size_t traces = 0;
  for (const auto& path : corpus_files()) {
    auto spec = parse_problem(slurp(path));
    auto res = expand(spec.gens, spec.weight, spec.options);
    std::vector<const std::vector<TraceStep>*> all;
    for (const auto& s : res.solutions) all.push_back(&s.trace);
    for (const auto& d : res.dead) all.push_back(&d.trace);
    for (const auto* trace : all) {
      ++traces;
      for (std::size_t k = 1; k < trace->size(); ++k) {
        const auto& prev = (*trace)[k - 1];
        const auto& cur = (*trace)[k];
        for (std::size_t i = 0; i < cur.set.eta.size(); ++i) {
          Val floor = prev.set.eta[i].scaled(prev.d_gamma, spec.weight.rows());
          if (prev.set.eta[i].is_infinite())
            require(cur.set.eta[i].is_infinite(), path + ": retired coordinate came back");
          else
            require(cur.set.eta[i] > floor, path + ": eta not strictly increasing");
        }
      }
    }
  }
  require(traces > 0, "no traces");
}

std::string run_cli(const std::string& file) {
  std::string cmd = std::string(PUISEUX_CLI) + " run " + file + " --json 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw Failure{"cannot start " + cmd};
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  pclose(pipe);
  return out;
}

// 8
void determinism() {
  auto files = corpus_files();
  require(files.size() >= 8, "corpus is missing files");
  for (const auto& f : files) {
    auto a = run_cli(f), b = run_cli(f);
    require(!a.empty(), f + ": empty output");
    require(a == b, f + ": outputs differ");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void()>>> criteria{
      {"plane-curve Newton polygon oracle equivalence", plane_curve_oracle},
      {"ramified exact solution of y1^2 - x1*x2", ramified_exact},
      {"residual growth of y1^2 - x1^2*(1 + x1) truncations", residual_growth},
      {"valuation and initial-form properties on 1000 random pairs", valuation_properties},
      {"tropical candidate soundness and edge-slope agreement", candidate_soundness},
      {"three-generator example: printed sets fail, corrected system expands", three_generator_example},
      {"strict eta increase along every corpus trace", monotonicity},
      {"byte-identical output across runs", determinism},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    std::string detail;
    bool ok = true;
    try {
      criteria[k].second();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " [" << k + 1 << "] " << criteria[k].first;
    if (!ok) std::cout << ": " << detail;
    std::cout << '\n';
    if (!ok) ++failed;
  }
  return failed ? 1 : 0;
}
