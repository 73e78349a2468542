// Brute-force search for starting sets: substitute y_i = c_i x^G_i for every
// (G, c) on a small rational grid and keep the tuples that cancel the lowest
// weighted part of every generator. Generators are given as plain term lists
// so nothing here depends on the library's polynomial code.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

namespace oracle {

using Q = mpq_class;

struct RawTerm {
  Q coeff;
  std::vector<Q> xexp;
  std::vector<int> ydeg;
};
using RawPoly = std::vector<RawTerm>;

struct MonomialTuple {
  std::vector<std::optional<std::vector<Q>>> gamma;  // nullopt: y_i = 0
  std::vector<Q> c;
};

inline std::vector<Q> weigh(const std::vector<std::vector<Q>>& w, const std::vector<Q>& a) {
  std::vector<Q> v;
  for (const auto& row : w) {
    Q s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += row[k] * a[k];
    v.push_back(s);
  }
  return v;
}

inline bool lex_less(const std::vector<Q>& a, const std::vector<Q>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// The lowest part of g(x, c x^G) under the weight cancels (or g vanishes).
inline bool cancels_lowest(const RawPoly& g, const std::vector<std::vector<Q>>& w, const MonomialTuple& t) {
  std::optional<std::vector<Q>> best;
  Q sum = 0;
  for (const auto& term : g) {
    std::vector<Q> e = term.xexp;
    Q coeff = term.coeff;
    bool dead = false;
    for (std::size_t i = 0; i < term.ydeg.size() && !dead; ++i) {
      if (term.ydeg[i] == 0) continue;
      if (!t.gamma[i]) {
        dead = true;
        break;
      }
      for (int p = 0; p < term.ydeg[i]; ++p) {
        coeff *= t.c[i];
        for (std::size_t k = 0; k < e.size(); ++k) e[k] += (*t.gamma[i])[k];
      }
    }
    if (dead) continue;
    auto v = weigh(w, e);
    if (!best || lex_less(v, *best)) {
      best = v;
      sum = coeff;
    } else if (std::equal(v.begin(), v.end(), best->begin(), best->end())) {
      sum += coeff;
    }
  }
  return !best || sum == 0;
}

// Only the terms' values matter for whether cancellation is possible at all.
inline bool lowest_tied(const RawPoly& g, const std::vector<std::vector<Q>>& w,
                        const std::vector<std::optional<std::vector<Q>>>& gamma) {
  std::optional<std::vector<Q>> best;
  int count = 0;
  for (const auto& term : g) {
    std::vector<Q> e = term.xexp;
    bool dead = false;
    for (std::size_t i = 0; i < term.ydeg.size(); ++i) {
      if (term.ydeg[i] == 0) continue;
      if (!gamma[i]) {
        dead = true;
        break;
      }
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += Q(term.ydeg[i]) * (*gamma[i])[k];
    }
    if (dead) continue;
    auto v = weigh(w, e);
    if (!best || lex_less(v, *best)) {
      best = v;
      count = 1;
    } else if (std::equal(v.begin(), v.end(), best->begin(), best->end())) {
      ++count;
    }
  }
  return !best || count >= 2;
}

// Every tuple with exponents from `exps` (or absent) and coefficients from
// `coeffs` whose substitution cancels the lowest part of all generators.
inline std::vector<MonomialTuple> brute_starting_sets(const std::vector<RawPoly>& gens,
                                                      const std::vector<std::vector<Q>>& w, std::size_t m,
                                                      const std::vector<std::vector<Q>>& exps,
                                                      const std::vector<Q>& coeffs) {
  std::vector<MonomialTuple> out;
  std::vector<std::optional<std::vector<Q>>> gamma(m);
  std::function<void(std::size_t)> pick_gamma = [&](std::size_t i) {
    if (i == m) {
      for (const auto& g : gens)
        if (!lowest_tied(g, w, gamma)) return;
      MonomialTuple t{gamma, std::vector<Q>(m, 0)};
      std::function<void(std::size_t)> pick_c = [&](std::size_t k) {
        if (k == m) {
          bool ok = true;
          for (const auto& g : gens) ok = ok && cancels_lowest(g, w, t);
          if (ok) out.push_back(t);
          return;
        }
        if (!gamma[k]) {
          t.c[k] = 0;
          pick_c(k + 1);
          return;
        }
        for (const auto& c : coeffs) {
          t.c[k] = c;
          pick_c(k + 1);
        }
      };
      pick_c(0);
      return;
    }
    gamma[i] = std::nullopt;
    pick_gamma(i + 1);
    for (const auto& e : exps) {
      gamma[i] = e;
      pick_gamma(i + 1);
    }
  };
  pick_gamma(0);
  return out;
}

inline std::vector<Q> small_rationals(long max_num, long max_den) {
  std::vector<Q> out;
  for (long q = 1; q <= max_den; ++q)
    for (long p = -max_num; p <= max_num; ++p) {
      if (p == 0) continue;
      Q r(p, q);
      r.canonicalize();
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
