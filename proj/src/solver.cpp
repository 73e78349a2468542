#include "puiseux/solver.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "puiseux/error.hpp"

namespace puiseux {

MPoly::MPoly(std::size_t vars, std::vector<Entry> entries) : vars_(vars), entries_(std::move(entries)) {
  for (const auto& e : entries_)
    if (e.mono.size() != vars_) throw Error(ErrorCode::DimensionMismatch, "monomial length mismatch");
  normalize();
}

MPoly MPoly::constant(std::size_t vars, const Rat& c) { return MPoly(vars, {Entry{Mono(vars, 0), c}}); }

void MPoly::normalize() {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.mono > b.mono; });
  std::vector<Entry> out;
  for (auto& e : entries_) {
    if (!out.empty() && out.back().mono == e.mono) {
      out.back().coeff += e.coeff;
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      out.push_back(std::move(e));
    }
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  entries_ = std::move(out);
}

bool MPoly::is_constant() const {
  return entries_.empty() ||
         (entries_.size() == 1 &&
          std::all_of(entries_[0].mono.begin(), entries_[0].mono.end(), [](int e) { return e == 0; }));
}

MPoly MPoly::operator+(const MPoly& g) const {
  std::vector<Entry> all = entries_;
  all.insert(all.end(), g.entries_.begin(), g.entries_.end());
  return MPoly(vars_, std::move(all));
}

MPoly MPoly::operator-(const MPoly& g) const {
  std::vector<Entry> all = entries_;
  for (const auto& e : g.entries_) all.push_back(Entry{e.mono, -e.coeff});
  return MPoly(vars_, std::move(all));
}

MPoly MPoly::mul_term(const Rat& c, const Mono& m) const {
  MPoly r(vars_);
  if (sgn(c) == 0) return r;
  r.entries_ = entries_;
  for (auto& e : r.entries_) {
    e.coeff *= c;
    for (std::size_t i = 0; i < vars_; ++i) e.mono[i] += m[i];
  }
  return r;  // multiplying by a monomial preserves the order
}

MPoly MPoly::monic() const {
  if (is_zero()) return *this;
  MPoly r = *this;
  Rat inv = 1 / lead_coeff();
  for (auto& e : r.entries_) e.coeff *= inv;
  return r;
}

int MPoly::max_var() const {
  int best = -1;
  for (const auto& e : entries_)
    for (std::size_t i = 0; i < vars_; ++i)
      if (e.mono[i] > 0) best = std::max(best, static_cast<int>(i));
  return best;
}

std::vector<bool> MPoly::support() const {
  std::vector<bool> s(vars_, false);
  for (const auto& e : entries_)
    for (std::size_t i = 0; i < vars_; ++i)
      if (e.mono[i] > 0) s[i] = true;
  return s;
}

MPoly MPoly::specialize(std::size_t var, const Rat& value) const {
  std::vector<Entry> out;
  for (const auto& e : entries_) {
    Rat c = e.coeff;
    for (int k = 0; k < e.mono[var]; ++k) c *= value;
    Mono m = e.mono;
    m.erase(m.begin() + static_cast<std::ptrdiff_t>(var));
    out.push_back(Entry{std::move(m), c});
  }
  return MPoly(vars_ - 1, std::move(out));
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
  Rat sum = 0;
  for (const auto& e : entries_) {
    Rat t = e.coeff;
    for (std::size_t i = 0; i < vars_; ++i)
      for (int k = 0; k < e.mono[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

namespace {

using Mono = MPoly::Mono;

bool divides(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Mono mono_div(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool coprime(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

MPoly spoly(const MPoly& f, const MPoly& g) {
  Mono l = mono_lcm(f.lead_mono(), g.lead_mono());
  return f.mul_term(1 / f.lead_coeff(), mono_div(l, f.lead_mono())) -
         g.mul_term(1 / g.lead_coeff(), mono_div(l, g.lead_mono()));
}

}  // namespace

MPoly reduce(const MPoly& f, const std::vector<MPoly>& basis) {
  std::vector<MPoly::Entry> rem;
  MPoly h = f;
  while (!h.is_zero()) {
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero() || !divides(g.lead_mono(), h.lead_mono())) continue;
      h = h - g.mul_term(h.lead_coeff() / g.lead_coeff(), mono_div(h.lead_mono(), g.lead_mono()));
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(h.entries().front());
      h = h - MPoly(h.vars(), {h.entries().front()});
    }
  }
  return MPoly(f.vars(), std::move(rem));
}

std::vector<MPoly> buchberger_lex(const std::vector<MPoly>& system, std::size_t max_pairs) {
  std::size_t vars = system.empty() ? 0 : system.front().vars();
  std::vector<MPoly> basis;
  for (const auto& f : system) {
    if (f.vars() != vars) throw Error(ErrorCode::DimensionMismatch, "mixed variable counts");
    if (f.is_zero()) continue;
    if (f.is_constant()) return {MPoly::constant(vars, 1)};
    basis.push_back(f.monic());
  }

  // Pending pairs, selected by smallest lcm (normal strategy).
  struct Pair {
    Mono lcm;
    std::size_t i, j;
  };
  std::vector<Pair> pairs;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (coprime(basis[i].lead_mono(), basis[j].lead_mono())) continue;
      pairs.push_back(Pair{mono_lcm(basis[i].lead_mono(), basis[j].lead_mono()), i, j});
    }
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

  std::size_t processed = 0;
  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      if (a.lcm != b.lcm) return a.lcm < b.lcm;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    });
    Pair p = *it;
    pairs.erase(it);
    if (++processed > max_pairs)
      throw Error(ErrorCode::BudgetExceeded,
                  "Groebner basis exceeded " + std::to_string(max_pairs) + " S-pair reductions");
    MPoly r = reduce(spoly(basis[p.i], basis[p.j]), basis);
    if (r.is_zero()) continue;
    if (r.is_constant()) return {MPoly::constant(vars, 1)};
    basis.push_back(r.monic());
    add_pairs_for(basis.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another.
  std::vector<MPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !divides(basis[j].lead_mono(), basis[i].lead_mono())) continue;
      redundant = basis[j].lead_mono() != basis[i].lead_mono() || j < i;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Interreduce.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = reduce(minimal[i], others).monic();
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const MPoly& a, const MPoly& b) { return a.lead_mono() < b.lead_mono(); });
  return minimal;
}

std::vector<MPoly> to_mpolys(const std::vector<LPoly>& system, const std::vector<std::size_t>& ys) {
  std::vector<MPoly> out;
  for (const auto& f : system) {
    std::vector<MPoly::Entry> entries;
    for (const auto& t : f.terms()) {
      if (!is_zero(t.xexp)) throw Error(ErrorCode::InvalidArgument, "system polynomial depends on x");
      Mono m(ys.size(), 0);
      int used = 0;
      for (std::size_t k = 0; k < ys.size(); ++k) {
        m[k] = t.ydeg[ys[k]];
        used += m[k];
      }
      int total = 0;
      for (int b : t.ydeg) total += b;
      if (used != total) throw Error(ErrorCode::InvalidArgument, "system uses an unlisted y variable");
      entries.push_back(MPoly::Entry{std::move(m), t.coeff});
    }
    out.emplace_back(ys.size(), std::move(entries));
  }
  return out;
}

namespace {

constexpr unsigned long kTrialLimit = 1000000;

/// Prime factorization of n > 0 by trial division, with a primality test on
/// the cofactor.
std::vector<std::pair<mpz_class, int>> factor(mpz_class n) {
  std::vector<std::pair<mpz_class, int>> out;
  for (unsigned long p = 2; p <= kTrialLimit && mpz_class(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) == 0) continue;
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    out.emplace_back(mpz_class(p), e);
  }
  if (n > 1) {
    bool is_prime = n <= mpz_class(kTrialLimit) * kTrialLimit || mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
    if (!is_prime)
      throw Error(ErrorCode::BudgetExceeded, "cannot factor coefficient " + n.get_str());
    out.emplace_back(n, 1);
  }
  return out;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> ds{1};
  for (const auto& [p, e] : factor(abs(n))) {
    std::size_t base = ds.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  return ds;
}

Rat horner(const std::vector<Rat>& c, const Rat& x) {
  Rat acc = 0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

/// Divides by (t - r); exact when r is a root.
std::vector<Rat> deflate(const std::vector<Rat>& c, const Rat& r) {
  std::vector<Rat> q(c.size() - 1);
  Rat carry = 0;
  for (std::size_t k = c.size(); k-- > 1;) {
    carry = carry * r + c[k];
    q[k - 1] = carry;
  }
  return q;
}

}  // namespace

std::vector<Rat> rational_roots(const std::vector<Rat>& coeffs, bool& irrational) {
  std::vector<Rat> c = coeffs;
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
  if (c.empty()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has every root");
  std::size_t low = 0;
  while (sgn(c[low]) == 0) ++low;
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(low));
  if (c.size() == 1) return {};

  mpz_class den = lcm_of_denominators(c);
  std::vector<mpz_class> ic;
  for (const auto& v : c) ic.push_back(mpz_class(v * den));

  std::set<Rat> candidates;
  for (const auto& p : divisors(ic.front()))
    for (const auto& q : divisors(ic.back())) {
      Rat r(p, q);
      r.canonicalize();
      candidates.insert(r);
      candidates.insert(-r);
    }
  std::vector<Rat> roots;
  for (const auto& r : candidates) {
    if (sgn(horner(c, r)) != 0) continue;
    roots.push_back(r);
    while (c.size() > 1 && sgn(horner(c, r)) == 0) c = deflate(c, r);
  }
  if (c.size() > 1) irrational = true;
  return roots;
}

namespace {

void solve_rec(const std::vector<MPoly>& system, std::size_t vars, std::size_t max_pairs,
               TorusSolutionSet& acc, std::vector<std::vector<Rat>>& out) {
  if (vars == 0) {
    for (const auto& f : system)
      if (!f.is_zero()) return;
    out.push_back({});
    return;
  }
  auto basis = buchberger_lex(system, max_pairs);
  if (basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero()) return;
  const std::size_t last = vars - 1;
  const MPoly* eliminant = nullptr;
  for (const auto& g : basis) {
    auto s = g.support();
    bool univariate = s[last];
    for (std::size_t i = 0; i < last; ++i) univariate = univariate && !s[i];
    if (univariate) {
      eliminant = &g;
      break;
    }
  }
  if (!eliminant) {
    acc.nonzero_dimensional = true;
    return;
  }
  std::vector<Rat> coeffs;
  for (const auto& e : eliminant->entries()) {
    std::size_t d = static_cast<std::size_t>(e.mono[last]);
    if (coeffs.size() <= d) coeffs.resize(d + 1);
    coeffs[d] += e.coeff;
  }
  bool irrational = false;
  auto roots = rational_roots(coeffs, irrational);
  if (irrational) acc.irrational_roots_detected = true;
  for (const auto& r : roots) {
    std::vector<MPoly> next;
    for (const auto& g : basis) {
      MPoly s = g.specialize(last, r);
      if (!s.is_zero()) next.push_back(std::move(s));
    }
    std::vector<std::vector<Rat>> sub;
    solve_rec(next, vars - 1, max_pairs, acc, sub);
    for (auto& s : sub) {
      s.push_back(r);
      out.push_back(std::move(s));
    }
  }
}

}  // namespace

TorusSolutionSet torus_solutions(const std::vector<MPoly>& system, std::size_t vars,
                                 std::size_t max_pairs) {
  for (const auto& f : system)
    if (f.vars() != vars) throw Error(ErrorCode::DimensionMismatch, "mixed variable counts");
  TorusSolutionSet result;
  std::vector<MPoly> nonzero;
  for (const auto& f : system)
    if (!f.is_zero()) nonzero.push_back(f);
  if (nonzero.empty() && vars > 0) {
    result.nonzero_dimensional = true;
    return result;
  }
  std::vector<std::vector<Rat>> sols;
  solve_rec(nonzero, vars, max_pairs, result, sols);
  std::sort(sols.begin(), sols.end());
  sols.erase(std::unique(sols.begin(), sols.end()), sols.end());
  for (const auto& s : sols)
    for (const auto& f : nonzero)
      if (sgn(f.eval(s)) != 0) throw std::logic_error("torus solution does not satisfy the system");
  result.solutions = std::move(sols);
  return result;
}

TorusSolutionSet torus_solutions(const std::vector<LPoly>& system, const std::vector<std::size_t>& ys,
                                 std::size_t max_pairs) {
  return torus_solutions(to_mpolys(system, ys), ys.size(), max_pairs);
}

}  // namespace puiseux
