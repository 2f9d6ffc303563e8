#include "dynlab/arith.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dynlab {

namespace {

// Incremental odd-trial-division prime list, one per thread so callers never
// contend; extension is monotone.
const std::vector<uint64_t>& primes_with_at_least(size_t count, uint64_t at_least_limit = 0) {
  thread_local std::vector<uint64_t> primes{2, 3, 5, 7, 11, 13};
  auto is_prime = [&](uint64_t n) {
    for (uint64_t p : primes) {
      if (p * p > n) return true;
      if (n % p == 0) return false;
    }
    return true;  // unreachable while extension stays incremental
  };
  uint64_t cand = primes.back();
  while (primes.size() < count || primes.back() < at_least_limit) {
    cand += 2;
    if (is_prime(cand)) primes.push_back(cand);
  }
  return primes;
}

bool is_probable_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0; }

// Pollard rho (Brent variant); n odd composite, not a perfect power of a
// trial-division prime. Only reached for cofactors beyond the trial bound.
Int pollard_rho(const Int& n) {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x9e3779b97f4a7c15ULL);
  while (true) {
    Int c = rng.get_z_range(n - 3) + 1;
    Int x = rng.get_z_range(n - 2) + 1;
    Int y = x, d = 1, diff;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      diff = x - y;
      if (sgn(diff) == 0) break;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_into(Int n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out[n] += 1;
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(Int(n / d), out);
}

}  // namespace

Int Factorization::radical() const {
  Int r = 1;
  for (const auto& [p, e] : factors) r *= p;
  return r;
}

unsigned Factorization::exponent_of(const Int& p) const {
  for (const auto& [q, e] : factors)
    if (q == p) return e;
  return 0;
}

Int Factorization::value() const {
  Int v = 1;
  for (const auto& [p, e] : factors) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

Factorization factorize(const Int& n) {
  if (sgn(n) == 0) throw std::domain_error("factorize: argument must be nonzero");
  Int m = abs(n);
  Factorization f;
  if (m == 1) return f;

  static constexpr uint64_t kTrialBound = 1u << 20;
  const auto& primes = primes_with_at_least(6);
  for (size_t i = 0;; ++i) {
    if (i >= primes.size()) primes_with_at_least(primes.size() + 64);
    const uint64_t p = primes[i];
    if (p > kTrialBound) break;
    Int pz(static_cast<unsigned long>(p));
    if (pz * pz > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        m /= pz;
        ++e;
      }
      f.factors.emplace_back(pz, e);
    }
    if (m == 1) break;
  }
  if (m > 1) {
    if (is_probable_prime(m)) {
      f.factors.emplace_back(m, 1);
    } else {
      std::map<Int, unsigned> rest;
      factor_into(m, rest);
      for (const auto& [p, e] : rest) f.factors.emplace_back(p, e);
      std::sort(f.factors.begin(), f.factors.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
    }
  }
  return f;
}

Int radical(const Int& n) {
  if (sgn(n) <= 0) throw std::domain_error("radical: argument must be >= 1");
  if (n == 1) return 1;
  return factorize(n).radical();
}

Int kfree_part(const Int& n, int k) {
  if (sgn(n) <= 0) throw std::domain_error("kfree_part: argument must be >= 1");
  if (k < 2) throw std::domain_error("kfree_part: k must be >= 2");
  if (n == 1) return 1;
  Int s = 1;
  for (const auto& [p, e] : factorize(n).factors) {
    if (e < static_cast<unsigned>(k)) {
      Int pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
      s *= pe;
    }
  }
  return s;
}

Int delta_div(const Int& ell, const Int& m) {
  if (sgn(ell) == 0 || sgn(m) == 0) throw std::domain_error("delta_div: arguments must be nonzero");
  Int am = abs(m);
  Int d = 1;
  for (const auto& [p, e] : factorize(ell).factors) {
    (void)e;
    int v = valuation(am, p);
    if (v > 0) {
      Int pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned>(v));
      d *= pe;
    }
  }
  return d;
}

int omega(const Int& n) {
  if (sgn(n) <= 0) throw std::domain_error("omega: argument must be >= 1");
  if (n == 1) return 0;
  return factorize(n).omega();
}

int valuation(const Int& n, const Int& p) {
  if (sgn(n) == 0) throw std::domain_error("valuation: argument must be nonzero");
  Int m = abs(n);
  int v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++v;
  }
  return v;
}

std::vector<Int> primes_coprime_to(const Int& m, int count) {
  if (sgn(m) <= 0) throw std::domain_error("primes_coprime_to: m must be >= 1");
  if (count < 1) throw std::domain_error("primes_coprime_to: count must be >= 1");
  std::vector<Int> out;
  size_t need = static_cast<size_t>(count) + 8;
  for (size_t i = 0; static_cast<int>(out.size()) < count; ++i) {
    const auto& primes = primes_with_at_least(need);
    if (i >= primes.size()) {
      need = primes.size() + 64;
      continue;
    }
    Int p(static_cast<unsigned long>(primes[i]));
    if (!mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) out.push_back(p);
  }
  return out;
}

Int nth_prime(int n) {
  if (n < 1) throw std::domain_error("nth_prime: n must be >= 1");
  const auto& primes = primes_with_at_least(static_cast<size_t>(n));
  return Int(static_cast<unsigned long>(primes[static_cast<size_t>(n) - 1]));
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

const Int& IntPoly::coeff(int i) const {
  static const Int zero = 0;
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[static_cast<size_t>(i)];
}

IntPoly IntPoly::monomial(int deg, Int c) {
  std::vector<Int> v(static_cast<size_t>(deg) + 1, Int(0));
  v.back() = std::move(c);
  return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.c_.size()) c[i] += a.c_[i];
    if (i < b.c_.size()) c[i] += b.c_[i];
  }
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.c_.size()) c[i] += a.c_[i];
    if (i < b.c_.size()) c[i] -= b.c_[i];
  }
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return IntPoly();
  std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(c));
}

IntPoly chebyshev(int ell) {
  if (ell < 1) throw std::domain_error("chebyshev: index must be >= 1");
  IntPoly prev({Int(2)});           // C_0 = 2
  IntPoly cur = IntPoly::monomial(1);  // C_1 = w
  const IntPoly w = IntPoly::monomial(1);
  for (int i = 1; i < ell; ++i) {
    IntPoly next = w * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace dynlab
