#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace puiseux {

/// Arbitrary precision rational, always kept canonical.
using Rat = mpq_class;

/// Exponent of a monomial x^a, one rational per x variable.
using ExpVec = std::vector<Rat>;

/// Exponent of a monomial y^b, one nonnegative integer per y variable.
using YDeg = std::vector<int>;

Rat make_rat(long num, long den = 1);

/// Accepts "p", "-p", "p/q". Throws Error(Parse) on anything else.
Rat parse_rat(std::string_view text);

std::string to_string(const Rat& r);

mpz_class lcm_of_denominators(const std::vector<Rat>& values);

ExpVec operator+(const ExpVec& a, const ExpVec& b);
ExpVec operator-(const ExpVec& a, const ExpVec& b);
ExpVec operator*(const Rat& k, const ExpVec& a);

bool is_zero(const ExpVec& a);

}  // namespace puiseux
