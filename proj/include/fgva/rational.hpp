#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "fgva/errors.hpp"

namespace fgva {

// Exact coefficient field: arbitrary-precision rationals, always in canonical
// reduced form with positive denominator (cpp_rational maintains both).
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_to_string(const Rat& q) { return q.str(); }

Rat rat_from_string(std::string_view text);

// C(n, k) for arbitrary integer n and k >= 0.
Rat rat_binomial(long long n, long long k);

Rat rat_factorial(long long k);

// q^e for integer e (q != 0 when e < 0).
Rat rat_pow(const Rat& q, long long e);

}  // namespace fgva
