#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace jkinv {

// GMP rationals are kept canonical (reduced, positive denominator) after every
// arithmetic operation, which is the only invariant we need.
using Rat = mpq_class;
using Int = mpz_class;
using Vec = std::vector<Rat>;

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& q);

bool is_zero(const Vec& v);
Vec scaled(const Vec& v, const Rat& c);
Vec add(const Vec& a, const Vec& b);
Rat dot(const Vec& a, const Vec& b);

}  // namespace jkinv
