#pragma once
//
// Exact reduced rational x/y with y >= 1; the canonical zero is 0/1.
//

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace dynlab {

class Rat {
 public:
  Rat() : q_(0) {}
  Rat(long v) : q_(v) {}
  explicit Rat(const mpz_class& v) : q_(v) {}
  Rat(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (sgn(den) == 0) throw std::domain_error("Rat: zero denominator");
    q_.canonicalize();
  }
  Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}
  explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  // Accepts "x" or "x/y".
  static Rat parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(mpz_class(s));
    return Rat(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
  }

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  const mpq_class& mpq() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  std::string str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
  }
  std::string fraction_str() const { return num().get_str() + "/" + den().get_str(); }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) != 0; }
  friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) > 0; }

  size_t hash() const {
    size_t h = 1469598103934665603ull;
    auto mix = [&h](const mpz_class& z) {
      const size_t n = mpz_size(z.get_mpz_t());
      h ^= static_cast<size_t>(sgn(z)) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
      for (size_t i = 0; i < n; ++i) {
        h ^= static_cast<size_t>(mpz_getlimbn(z.get_mpz_t(), static_cast<mp_size_t>(i)));
        h *= 1099511628211ull;
      }
    };
    mix(q_.get_num());
    mix(q_.get_den());
    return h;
  }

 private:
  mpq_class q_;
};

}  // namespace dynlab

template <>
struct std::hash<dynlab::Rat> {
  size_t operator()(const dynlab::Rat& r) const { return r.hash(); }
};
