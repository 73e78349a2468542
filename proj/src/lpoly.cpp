#include "puiseux/lpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "puiseux/error.hpp"

namespace puiseux {

namespace {

bool key_less(const Term& a, const Term& b) {
  if (a.xexp != b.xexp) return a.xexp < b.xexp;
  return a.ydeg < b.ydeg;
}

bool same_key(const Term& a, const Term& b) { return a.xexp == b.xexp && a.ydeg == b.ydeg; }

void check_same_shape(const LPoly& f, const LPoly& g) {
  if (f.nx() != g.nx() || f.ny() != g.ny())
    throw Error(ErrorCode::DimensionMismatch, "polynomials live in different rings");
}

}  // namespace

LPoly::LPoly(std::size_t n, std::size_t m, std::vector<Term> terms)
    : n_(n), m_(m), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.xexp.size() != n_ || t.ydeg.size() != m_)
      throw Error(ErrorCode::DimensionMismatch, "term shape does not match polynomial ring");
  normalize();
}

void LPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), key_less);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && same_key(out.back(), t)) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  terms_ = std::move(out);
}

LPoly LPoly::constant(std::size_t n, std::size_t m, const Rat& c) {
  return LPoly(n, m, {Term{c, ExpVec(n), YDeg(m, 0)}});
}

LPoly LPoly::x_monomial(const Rat& c, ExpVec xexp, std::size_t m) {
  std::size_t n = xexp.size();
  return LPoly(n, m, {Term{c, std::move(xexp), YDeg(m, 0)}});
}

LPoly LPoly::y_var(std::size_t n, std::size_t m, std::size_t i) {
  if (i >= m) throw Error(ErrorCode::DimensionMismatch, "y index out of range");
  YDeg d(m, 0);
  d[i] = 1;
  return LPoly(n, m, {Term{Rat(1), ExpVec(n), std::move(d)}});
}

bool LPoly::is_x_only() const {
  for (const auto& t : terms_)
    for (int b : t.ydeg)
      if (b != 0) return false;
  return true;
}

LPoly LPoly::operator+(const LPoly& g) const {
  check_same_shape(*this, g);
  std::vector<Term> all = terms_;
  all.insert(all.end(), g.terms_.begin(), g.terms_.end());
  return LPoly(n_, m_, std::move(all));
}

LPoly LPoly::operator-(const LPoly& g) const { return *this + (-g); }

LPoly LPoly::operator-() const {
  LPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LPoly LPoly::operator*(const LPoly& g) const {
  check_same_shape(*this, g);
  std::vector<Term> out;
  out.reserve(terms_.size() * g.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : g.terms_) {
      Term t{a.coeff * b.coeff, a.xexp + b.xexp, a.ydeg};
      for (std::size_t i = 0; i < m_; ++i) t.ydeg[i] += b.ydeg[i];
      out.push_back(std::move(t));
    }
  }
  return LPoly(n_, m_, std::move(out));
}

LPoly LPoly::scaled(const Rat& k) const {
  if (sgn(k) == 0) return LPoly(n_, m_);
  LPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= k;
  return r;
}

LPoly LPoly::pow(unsigned e) const {
  LPoly result = constant(n_, m_, 1);
  LPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

LPoly LPoly::y_free_part() const {
  LPoly r(n_, m_);
  for (const auto& t : terms_) {
    if (std::all_of(t.ydeg.begin(), t.ydeg.end(), [](int b) { return b == 0; }))
      r.terms_.push_back(t);
  }
  return r;
}

LPoly LPoly::retire(const std::vector<std::size_t>& ys) const {
  LPoly r(n_, m_);
  for (const auto& t : terms_) {
    bool keep = std::none_of(ys.begin(), ys.end(), [&](std::size_t i) { return t.ydeg[i] != 0; });
    if (keep) r.terms_.push_back(t);
  }
  return r;
}

namespace {

void append_power(std::ostringstream& os, const std::string& name, const Rat& e) {
  os << name;
  if (e == 1) return;
  if (e.get_den() == 1 && sgn(e) > 0)
    os << '^' << e.get_str();
  else
    os << "^(" << e.get_str() << ')';
}

}  // namespace

std::string LPoly::str(const std::vector<std::string>& xnames,
                       const std::vector<std::string>& ynames) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  // Print higher total y-degree first, which reads more naturally.
  std::vector<const Term*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
    return a->ydeg > b->ydeg;
  });
  bool first = true;
  for (const Term* t : order) {
    Rat c = t->coeff;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    std::vector<std::pair<std::string, Rat>> factors;
    for (std::size_t i = 0; i < ynames.size() && i < t->ydeg.size(); ++i)
      if (t->ydeg[i]) factors.emplace_back(ynames[i], Rat(t->ydeg[i]));
    for (std::size_t i = 0; i < xnames.size() && i < t->xexp.size(); ++i)
      if (sgn(t->xexp[i]) != 0) factors.emplace_back(xnames[i], t->xexp[i]);
    bool wrote = false;
    if (c != 1 || factors.empty()) {
      os << c.get_str();
      wrote = true;
    }
    for (const auto& [name, e] : factors) {
      if (wrote) os << '*';
      append_power(os, name, e);
      wrote = true;
    }
  }
  return os.str();
}

std::string LPoly::str() const {
  std::vector<std::string> xs, ys;
  for (std::size_t i = 0; i < n_; ++i) xs.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < m_; ++i) ys.push_back("y" + std::to_string(i + 1));
  return str(xs, ys);
}

Val term_value(const Term& t, const WeightMatrix& w, const EtaVec& eta) {
  if (eta.size() != t.ydeg.size())
    throw Error(ErrorCode::DimensionMismatch, "eta length differs from M");
  Val v = w.value_of(t.xexp);
  for (std::size_t i = 0; i < eta.size(); ++i) {
    if (t.ydeg[i] == 0) continue;  // inf * 0 = 0
    if (eta[i].is_infinite()) return Val::infinity();
    v = v + eta[i].scaled(Rat(t.ydeg[i]), w.rows());
  }
  return v;
}

Val ord_w_eta(const LPoly& f, const WeightMatrix& w, const EtaVec& eta) {
  Val best = Val::infinity();
  for (const auto& t : f.terms()) {
    Val v = term_value(t, w, eta);
    if (v < best) best = std::move(v);
  }
  return best;
}

LPoly in_w_eta(const LPoly& f, const WeightMatrix& w, const EtaVec& eta) {
  std::vector<Val> values;
  values.reserve(f.size());
  Val best = Val::infinity();
  for (const auto& t : f.terms()) {
    values.push_back(term_value(t, w, eta));
    if (values.back() < best) best = values.back();
  }
  if (best.is_infinite()) return LPoly(f.nx(), f.ny());
  std::vector<Term> out;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (values[i] == best) out.push_back(f.terms()[i]);
  return LPoly(f.nx(), f.ny(), std::move(out));
}

LPoly subs_ramify(const LPoly& f, unsigned k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "ramification index must be positive");
  std::vector<Term> out = f.terms();
  Rat kk(k);
  for (auto& t : out)
    for (auto& e : t.xexp) e *= kk;
  return LPoly(f.nx(), f.ny(), std::move(out));
}

namespace {

/// Caches powers p^k for the substitution routines.
class PowerCache {
 public:
  explicit PowerCache(LPoly base) : powers_{LPoly::constant(base.nx(), base.ny(), 1), base} {}
  const LPoly& get(int k) {
    while (static_cast<int>(powers_.size()) <= k) powers_.push_back(powers_.back() * powers_[1]);
    return powers_[k];
  }

 private:
  std::vector<LPoly> powers_;
};

}  // namespace

LPoly subs_shift(const LPoly& f, const std::vector<LPoly>& m) {
  if (m.size() != f.ny()) throw Error(ErrorCode::DimensionMismatch, "shift tuple length differs from M");
  std::vector<PowerCache> caches;
  caches.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i].is_zero() && (m[i].nx() != f.nx() || m[i].ny() != f.ny() || !m[i].is_x_only()))
      throw Error(ErrorCode::InvalidArgument, "shift entries must be x-only polynomials");
    LPoly base = LPoly::y_var(f.nx(), f.ny(), i);
    if (!m[i].is_zero()) base = base + m[i];
    caches.emplace_back(std::move(base));
  }
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    LPoly acc = LPoly::x_monomial(t.coeff, t.xexp, f.ny());
    for (std::size_t i = 0; i < m.size(); ++i)
      if (t.ydeg[i]) acc = acc * caches[i].get(t.ydeg[i]);
    out.insert(out.end(), acc.terms().begin(), acc.terms().end());
  }
  return LPoly(f.nx(), f.ny(), std::move(out));
}

LPoly eval_x_one(const LPoly& f) {
  std::vector<Term> out = f.terms();
  for (auto& t : out) t.xexp.assign(f.nx(), Rat(0));
  return LPoly(f.nx(), f.ny(), std::move(out));
}

LPoly eval_series(const LPoly& f, const std::vector<LPoly>& s) {
  if (s.size() != f.ny()) throw Error(ErrorCode::DimensionMismatch, "series tuple length differs from M");
  std::vector<PowerCache> caches;
  caches.reserve(s.size());
  for (const auto& si : s) {
    LPoly base = si.is_zero() ? LPoly(f.nx(), f.ny()) : si;
    if (base.nx() != f.nx() || base.ny() != f.ny() || !base.is_x_only())
      throw Error(ErrorCode::InvalidArgument, "series entries must be x-only polynomials");
    caches.emplace_back(std::move(base));
  }
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    LPoly acc = LPoly::x_monomial(t.coeff, t.xexp, f.ny());
    for (std::size_t i = 0; i < s.size() && !acc.is_zero(); ++i)
      if (t.ydeg[i]) acc = acc * caches[i].get(t.ydeg[i]);
    out.insert(out.end(), acc.terms().begin(), acc.terms().end());
  }
  return LPoly(f.nx(), f.ny(), std::move(out));
}

}  // namespace puiseux
