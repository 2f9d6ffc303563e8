#pragma once
//
// Outward-rounded real arithmetic used by every certified computation.
//
// All transcendental values are evaluated in double precision and inflated
// outward by a relative slack of 2^-40 plus a small absolute guard. The slack
// dominates libm and conversion error by a few orders of magnitude at the
// integer sizes this project handles, so directed bounds stay sound without
// arbitrary-precision logarithms.
//

#include <gmpxx.h>

#include <cmath>

namespace dynlab {

using Int = mpz_class;
using Ratio = mpq_class;

inline constexpr double kRelSlack = 9.094947017729282e-13;  // 2^-40
inline constexpr double kAbsGuard = 1e-18;

inline double round_up(double x) { return x + (std::fabs(x) * kRelSlack + kAbsGuard); }
inline double round_down(double x) { return x - (std::fabs(x) * kRelSlack + kAbsGuard); }

// ln(n) for n >= 1.
double log_upper(const Int& n);
double log_lower(const Int& n);

// ln|num/den| for num != 0, den >= 1. The slack accounts for cancellation
// between the two terms, so these stay sound even when the ratio is near 1.
double log_abs_upper(const Int& num, const Int& den);
double log_abs_lower(const Int& num, const Int& den);

// q * ln(p) for exact rational q, directed outward.
double mul_log_upper(const Ratio& q, const Int& p);
double mul_log_lower(const Ratio& q, const Int& p);

inline double exp_upper(double x) { return round_up(std::exp(round_up(x))); }

// Directed x*y and x/y for y > 0 (used for d^-n scaling).
inline double mul_up(double x, double y) { return round_up(x * y); }
inline double mul_down(double x, double y) { return round_down(x * y); }

}  // namespace dynlab
