#include "puiseux/tropical.hpp"

#include <algorithm>
#include <set>

#include "puiseux/error.hpp"
#include "puiseux/linalg.hpp"

namespace puiseux {

namespace {

struct TiePair {
  std::vector<Rat> coeffs;  // (b - b') restricted to lambda
  std::vector<Rat> rhs;     // W (a' - a)
};

struct EtaLess {
  bool operator()(const EtaVec& a, const EtaVec& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

std::vector<std::size_t> complement(std::size_t m, const std::vector<std::size_t>& lambda) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m; ++i)
    if (std::find(lambda.begin(), lambda.end(), i) == lambda.end()) out.push_back(i);
  return out;
}

/// At least two terms attain the minimum value.
bool has_tie(const LPoly& g, const WeightMatrix& w, const EtaVec& eta) {
  Val best = Val::infinity();
  int count = 0;
  for (const auto& t : g.terms()) {
    Val v = term_value(t, w, eta);
    auto c = v <=> best;
    if (c < 0) {
      best = std::move(v);
      count = 1;
    } else if (c == 0) {
      ++count;
    }
  }
  return best.is_finite() && count >= 2;
}

class Enumerator {
 public:
  Enumerator(std::vector<LPoly> gens, const WeightMatrix& w, std::vector<std::size_t> lambda,
             bool positive_only)
      : gens_(std::move(gens)), w_(w), lambda_(std::move(lambda)), positive_only_(positive_only) {
    const std::size_t m = gens_.front().ny();
    for (const auto& g : gens_) {
      std::vector<TiePair> pairs;
      const auto& ts = g.terms();
      for (std::size_t a = 0; a < ts.size(); ++a) {
        for (std::size_t b = a + 1; b < ts.size(); ++b) {
          if (ts[a].ydeg == ts[b].ydeg) continue;
          TiePair p;
          for (std::size_t i : lambda_) p.coeffs.push_back(Rat(ts[a].ydeg[i] - ts[b].ydeg[i]));
          p.rhs = w_.value_of(ts[b].xexp - ts[a].xexp).coords();
          pairs.push_back(std::move(p));
        }
      }
      pairs_.push_back(std::move(pairs));
    }
    for (const auto& ps : pairs_) all_pairs_.insert(all_pairs_.end(), ps.begin(), ps.end());
    m_ = m;
  }

  CandidateSet run() {
    EchelonSystem sys(lambda_.size(), w_.rows());
    descend(0, sys);
    CandidateSet out;
    out.etas.assign(found_.begin(), found_.end());
    out.underdetermined = underdetermined_;
    return out;
  }

 private:
  void descend(std::size_t g, const EchelonSystem& sys) {
    if (sys.determined() || g == gens_.size()) {
      leaf(sys);
      return;
    }
    for (const auto& p : pairs_[g]) {
      EchelonSystem next = sys;
      if (next.add_row(p.coeffs, p.rhs) == EchelonSystem::AddResult::Inconsistent) continue;
      descend(g + 1, next);
    }
  }

  void leaf(const EchelonSystem& sys) {
    if (sys.determined()) {
      consider(sys);
      return;
    }
    // One tie per generator leaves a positive dimensional locus: look for
    // isolated points on it by adding further ties from any generator.
    std::size_t before = found_.size();
    bool any_valid = complete(sys, 0);
    if (!any_valid && found_.size() == before) ++underdetermined_;
  }

  bool complete(const EchelonSystem& sys, std::size_t start) {
    if (sys.determined()) return consider(sys);
    bool any = false;
    for (std::size_t k = start; k < all_pairs_.size(); ++k) {
      EchelonSystem next = sys;
      if (next.add_row(all_pairs_[k].coeffs, all_pairs_[k].rhs) !=
          EchelonSystem::AddResult::Independent)
        continue;
      any = complete(next, k + 1) || any;
    }
    return any;
  }

  bool consider(const EchelonSystem& sys) {
    auto x = sys.solution();
    EtaVec eta(m_, Val::infinity());
    for (std::size_t j = 0; j < lambda_.size(); ++j) eta[lambda_[j]] = Val((*x)[j]);
    if (found_.count(eta)) return true;
    if (rejected_.count(eta)) return false;
    bool ok = true;
    if (positive_only_)
      for (std::size_t i : lambda_) ok = ok && eta[i].is_positive();
    for (std::size_t g = 0; ok && g < gens_.size(); ++g) ok = has_tie(gens_[g], w_, eta);
    (ok ? found_ : rejected_).insert(std::move(eta));
    return ok;
  }

  std::vector<LPoly> gens_;
  const WeightMatrix& w_;
  std::vector<std::size_t> lambda_;
  bool positive_only_;
  std::size_t m_ = 0;
  std::vector<std::vector<TiePair>> pairs_;
  std::vector<TiePair> all_pairs_;
  std::set<EtaVec, EtaLess> found_;
  std::set<EtaVec, EtaLess> rejected_;
  std::size_t underdetermined_ = 0;
};

}  // namespace

CandidateSet candidate_etas(const std::vector<LPoly>& gens, const WeightMatrix& w,
                            const std::vector<std::size_t>& lambda, bool positive_only) {
  if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "no generators");
  const std::size_t m = gens.front().ny();
  for (std::size_t i : lambda)
    if (i >= m) throw Error(ErrorCode::InvalidArgument, "lambda index out of range");
  const auto retired = complement(m, lambda);

  std::vector<LPoly> reduced;
  for (const auto& g : gens) {
    if (g.nx() != w.cols()) throw Error(ErrorCode::DimensionMismatch, "generator N differs from W");
    LPoly r = g.retire(retired);
    if (r.is_zero()) continue;
    // A monomial, or an x-only polynomial (tie free under W), always has a
    // monomial initial form.
    if (r.is_monomial() || r.is_x_only()) return {};
    reduced.push_back(std::move(r));
  }
  if (lambda.empty() || reduced.empty()) {
    if (!reduced.empty()) return {};
    if (!lambda.empty()) {
      // Every generator vanishes: the tie locus is all of Q^lambda.
      CandidateSet out;
      out.underdetermined = 1;
      return out;
    }
    CandidateSet out;
    out.etas.push_back(EtaVec(m, Val::infinity()));
    return out;
  }
  return Enumerator(std::move(reduced), w, lambda, positive_only).run();
}

bool is_prevariety_point(const std::vector<LPoly>& gens, const WeightMatrix& w,
                         const EtaVec& eta) {
  std::vector<std::size_t> retired;
  for (std::size_t i = 0; i < eta.size(); ++i)
    if (eta[i].is_infinite()) retired.push_back(i);
  for (const auto& g : gens) {
    LPoly r = g.retire(retired);
    if (r.is_zero()) continue;
    if (in_w_eta(r, w, eta).size() < 2) return false;
  }
  return true;
}

}  // namespace puiseux
