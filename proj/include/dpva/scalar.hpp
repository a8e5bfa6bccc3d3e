#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dpva {

// Exact rational; gmpxx keeps results canonical (gcd 1, positive denominator).
using Scalar = mpq_class;

Scalar parse_scalar(std::string_view text);
std::string scalar_str(const Scalar& s);

Scalar factorial(int n);
Scalar binomial(int n, int k);  // 0 outside 0<=k<=n
Scalar falling(int n, int k);   // n!/(n-k)!, 0 if k>n or k<0

}  // namespace dpva
