/// @file exact_arith.hpp
/// @brief Exact rationals over GMP integers, plus gcd, trial-division
///        factorization and p-adic valuation on machine integers.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace parab {

/// Bad caller input (non-prime modulus, zero where a positive value is needed, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical hypothesis of a formula is not met (e.g. genus < 2).
class HypothesisViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exact computation produced something that must be impossible.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exact fraction. Always reduced with a positive denominator, so equality
/// is structural.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}                           // NOLINT(implicit)
  Rational(int v) : q_(v) {}                            // NOLINT(implicit)
  Rational(long long v) : q_(static_cast<long>(v)) {}   // NOLINT(implicit)
  Rational(const mpz_class& v) : q_(v) {}           // NOLINT(implicit)

  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw InvalidArgument("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  Rational(long long num, long long den)
      : Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

  /// Parses "p/q" or "p".
  static Rational parse(const std::string& s) {
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) throw InvalidArgument("Rational: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw InvalidArgument("Rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q);
  }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  /// Narrowing to a machine integer; throws unless integral and in range.
  long long to_int64() const {
    if (!is_integer()) throw InvalidArgument("Rational: " + str() + " is not an integer");
    const mpz_class& n = q_.get_num();
    if (!n.fits_slong_p()) throw InvalidArgument("Rational: " + str() + " out of range");
    return n.get_si();
  }

  /// "p/q", or "p" when q = 1.
  std::string str() const { return q_.get_str(10); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw InvalidArgument("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Largest a with p^a | n.
inline unsigned valuation(std::uint64_t n, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument("valuation: " + std::to_string(p) + " is not prime");
  if (n == 0) throw InvalidArgument("valuation: v_p(0) is undefined");
  unsigned a = 0;
  while (n % p == 0) {
    n /= p;
    ++a;
  }
  return a;
}

/// gcd of all entries; the empty gcd is 0.
inline std::uint64_t gcd_list(std::span<const std::uint64_t> xs) {
  std::uint64_t g = 0;
  for (auto x : xs) g = std::gcd(g, x);
  return g;
}

inline std::uint64_t gcd_list(std::initializer_list<std::uint64_t> xs) {
  return gcd_list(std::span<const std::uint64_t>(xs.begin(), xs.size()));
}

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Primes strictly increasing, exponents >= 1. Empty for n = 1.
using PrimeFactorization = std::vector<PrimePower>;

inline PrimeFactorization factorize(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("factorize: 0 has no factorization");
  PrimeFactorization out;
  for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    out.push_back({p, a});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

inline std::uint64_t expand(const PrimeFactorization& f) {
  std::uint64_t n = 1;
  for (const auto& [p, a] : f) n *= ipow(p, a);
  return n;
}

}  // namespace parab
