#pragma once
//
// Exact integer number theory shared by the whole project: factorization and
// the quantities derived from it (radical, k-free part, the largest divisor of
// m with radical dividing l), prime generation, and integer Chebyshev
// polynomials. Everything takes big integers so nothing upstream can overflow.
//

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace dynlab {

using Int = mpz_class;

struct Factorization {
  // (prime, exponent) pairs, primes strictly increasing, exponents >= 1.
  // The empty list is the factorization of 1.
  std::vector<std::pair<Int, unsigned>> factors;

  Int radical() const;
  int omega() const { return static_cast<int>(factors.size()); }
  unsigned exponent_of(const Int& p) const;
  Int value() const;  // product p^e
};

// Prime factorization of |n|; n must be nonzero. Trial division with a
// Pollard rho fallback for cofactors beyond the trial bound.
Factorization factorize(const Int& n);

Int radical(const Int& n);                    // n >= 1; rad(1) = 1
Int kfree_part(const Int& n, int k);          // n >= 1, k >= 2
Int delta_div(const Int& ell, const Int& m);  // ell, m != 0; largest divisor of |m| with radical dividing ell
int omega(const Int& n);                      // n >= 1
int valuation(const Int& n, const Int& p);    // v_p(n), n != 0

// The `count` smallest primes q with q not dividing m, ascending.
std::vector<Int> primes_coprime_to(const Int& m, int count);

// p_n, 1-indexed (p_1 = 2).
Int nth_prime(int n);

// Integer polynomial, coefficient index = degree. Leading coefficient is
// nonzero unless the polynomial is zero (empty coefficient vector).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Int& coeff(int i) const;
  const std::vector<Int>& coeffs() const { return c_; }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  static IntPoly monomial(int deg, Int c = 1);

 private:
  std::vector<Int> c_;
};

// C_l with C_l(z + 1/z) = z^l + 1/z^l, computed through the three-term
// recurrence C_0 = 2, C_1 = w, C_{l+1} = w C_l - C_{l-1}.
IntPoly chebyshev(int ell);

}  // namespace dynlab
