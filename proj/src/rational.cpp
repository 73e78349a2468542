#include "puiseux/rational.hpp"

#include <cctype>

#include "puiseux/error.hpp"

namespace puiseux {

Rat make_rat(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool parse_int(std::string_view s, mpz_class& out) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  out.set_str(std::string(s.substr(i)), 10);
  if (neg) out = -out;
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  mpz_class num, den = 1;
  bool ok = parse_int(text.substr(0, slash), num);
  if (ok && slash != std::string_view::npos) {
    auto rest = text.substr(slash + 1);
    ok = !rest.empty() && rest[0] != '-' && rest[0] != '+' && parse_int(rest, den) && den != 0;
  }
  if (!ok) throw Error(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

mpz_class lcm_of_denominators(const std::vector<Rat>& values) {
  mpz_class l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

ExpVec operator+(const ExpVec& a, const ExpVec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "exponent length mismatch");
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

ExpVec operator-(const ExpVec& a, const ExpVec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "exponent length mismatch");
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

ExpVec operator*(const Rat& k, const ExpVec& a) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

bool is_zero(const ExpVec& a) {
  for (const auto& v : a)
    if (sgn(v) != 0) return false;
  return true;
}

}  // namespace puiseux
