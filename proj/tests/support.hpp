#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "puiseux/lpoly.hpp"
#include "puiseux/problem.hpp"
#include "puiseux/value.hpp"

namespace testing {

using namespace puiseux;

inline Rat q(const char* s) { return parse_rat(s); }

inline Val val(std::initializer_list<const char*> xs) {
  std::vector<Rat> v;
  for (auto x : xs) v.push_back(q(x));
  return Val(std::move(v));
}

inline ExpVec ev(std::initializer_list<const char*> xs) {
  ExpVec v;
  for (auto x : xs) v.push_back(q(x));
  return v;
}

inline const std::vector<std::string>& x1() {
  static const std::vector<std::string> v{"x1"};
  return v;
}
inline const std::vector<std::string>& x12() {
  static const std::vector<std::string> v{"x1", "x2"};
  return v;
}
inline const std::vector<std::string>& y1() {
  static const std::vector<std::string> v{"y1"};
  return v;
}
inline const std::vector<std::string>& y12() {
  static const std::vector<std::string> v{"y1", "y2"};
  return v;
}

inline LPoly poly(const char* text, const std::vector<std::string>& xs, const std::vector<std::string>& ys) {
  return parse_polynomial(text, xs, ys);
}

// Random polynomials in 2 x variables and 2 y variables with small
// coefficients and half-integer x exponents.
class PolyGen {
 public:
  explicit PolyGen(unsigned seed) : rng_(seed) {}

  Rat small_rat(int num, int den) {
    std::uniform_int_distribution<int> p(-num, num), d(1, den);
    Rat r(p(rng_), d(rng_));
    r.canonicalize();
    return r;
  }
  Rat nonzero_rat(int num, int den) {
    for (;;) {
      Rat r = small_rat(num, den);
      if (r != 0) return r;
    }
  }
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  LPoly lpoly(std::size_t n, std::size_t m, int max_terms) {
    std::vector<Term> ts;
    int count = uniform(1, max_terms);
    for (int k = 0; k < count; ++k) {
      Term t{nonzero_rat(5, 3), {}, {}};
      for (std::size_t i = 0; i < n; ++i) t.xexp.push_back(small_rat(4, 2));
      for (std::size_t i = 0; i < m; ++i) t.ydeg.push_back(uniform(0, 3));
      ts.push_back(std::move(t));
    }
    return LPoly(n, m, std::move(ts));
  }

  EtaVec eta(std::size_t m, std::size_t d, bool allow_inf) {
    EtaVec e;
    for (std::size_t i = 0; i < m; ++i) {
      if (allow_inf && uniform(0, 4) == 0) {
        e.push_back(Val::infinity());
        continue;
      }
      std::vector<Rat> v;
      for (std::size_t k = 0; k < d; ++k) v.push_back(small_rat(6, 4));
      e.emplace_back(std::move(v));
    }
    return e;
  }

  WeightMatrix weight2() {
    for (;;) {
      std::vector<std::vector<Rat>> rows{{small_rat(5, 3), small_rat(5, 3)}, {small_rat(5, 3), small_rat(5, 3)}};
      if (rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0] != 0) return WeightMatrix(rows);
    }
  }

 private:
  std::mt19937 rng_;
};

}  // namespace testing
