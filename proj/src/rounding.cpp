#include "dynlab/rounding.hpp"

#include <stdexcept>

namespace dynlab {

namespace {

// Raw ln(n) via mantissa/exponent split; exact 0 for n == 1. Works for
// integers far beyond double range (the exponent carries the size).
double raw_log(const Int& n) {
  if (n == 1) return 0.0;
  signed long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * 0.6931471805599453094;
}

}  // namespace

double log_upper(const Int& n) {
  if (sgn(n) <= 0) throw std::domain_error("log_upper: argument must be >= 1");
  if (n == 1) return 0.0;
  return round_up(raw_log(n));
}

double log_lower(const Int& n) {
  if (sgn(n) <= 0) throw std::domain_error("log_lower: argument must be >= 1");
  if (n == 1) return 0.0;
  return round_down(raw_log(n));
}

double log_abs_upper(const Int& num, const Int& den) {
  if (sgn(num) == 0 || sgn(den) <= 0) throw std::domain_error("log_abs: bad arguments");
  const double ln = raw_log(Int(abs(num)));
  const double ld = raw_log(den);
  const double v = ln - ld;
  return v + ((std::fabs(ln) + std::fabs(ld)) * kRelSlack + 2 * kAbsGuard);
}

double log_abs_lower(const Int& num, const Int& den) {
  if (sgn(num) == 0 || sgn(den) <= 0) throw std::domain_error("log_abs: bad arguments");
  const double ln = raw_log(Int(abs(num)));
  const double ld = raw_log(den);
  const double v = ln - ld;
  return v - ((std::fabs(ln) + std::fabs(ld)) * kRelSlack + 2 * kAbsGuard);
}

double mul_log_upper(const Ratio& q, const Int& p) {
  if (sgn(q) == 0) return 0.0;
  const double lq = q.get_d();  // rounds toward zero; slack absorbs it
  const double lp = raw_log(p);
  return round_up(round_up(lq) * lp + std::fabs(lq * lp) * kRelSlack);
}

double mul_log_lower(const Ratio& q, const Int& p) {
  if (sgn(q) == 0) return 0.0;
  const double lq = q.get_d();
  const double lp = raw_log(p);
  return round_down(round_down(lq) * lp - std::fabs(lq * lp) * kRelSlack);
}

}  // namespace dynlab
