/// @file cyclotomic.hpp
/// @brief Exact arithmetic in Q(zeta_e) = Q[x]/Phi_e(x) and the root-of-unity
///        sums that feed the inertia contributions to orbifold Riemann-Roch.
#pragma once

#include "parab/exact_arith.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace parab {

namespace detail {

/// Dense polynomial, lowest degree first, no trailing zeros (zero = empty).
using QPoly = std::vector<Rational>;

inline void trim(QPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

inline QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

inline QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

/// Quotient and remainder of a by a nonzero b.
inline std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  if (b.empty()) throw InvalidArgument("polynomial division by zero");
  const int db = degree(b);
  if (degree(a) < db) return {{}, std::move(a)};
  QPoly q(a.size() - b.size() + 1);
  const Rational& lead = b.back();
  for (int k = degree(a); k >= db; --k) {
    const Rational c = a[k] / lead;
    if (c.is_zero()) continue;
    q[k - db] = c;
    for (int j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {std::move(q), std::move(a)};
}

// Exact division of integer polynomials by a monic divisor.
inline std::vector<long long> div_monic(std::vector<long long> a, const std::vector<long long>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<long long> q(a.size() - db);
  for (std::size_t k = a.size(); k-- > db;) {
    const long long c = a[k];
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  for (std::size_t j = 0; j < db; ++j) {
    if (a[j] != 0) throw InternalInconsistency("div_monic: division is not exact");
  }
  return q;
}

}  // namespace detail

/// Integer coefficients of the e-th cyclotomic polynomial, lowest degree
/// first: Phi_e = (x^e - 1) / prod_{d | e, d < e} Phi_d.
inline std::vector<long long> cyclotomic_poly(unsigned e) {
  if (e == 0) throw InvalidArgument("cyclotomic_poly: order must be >= 1");
  std::vector<long long> num(e + 1, 0);
  num[0] = -1;
  num[e] = 1;
  for (unsigned d = 1; d < e; ++d) {
    if (e % d == 0) num = detail::div_monic(std::move(num), cyclotomic_poly(d));
  }
  return num;
}

inline unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (const auto& [p, a] : factorize(n)) result -= result / static_cast<unsigned>(p);
  return result;
}

/// Q(zeta_e) presented as Q[x]/Phi_e. omega is the class of x.
class CycloField {
 public:
  explicit CycloField(unsigned e) : order_(e) {
    for (long long c : cyclotomic_poly(e)) modulus_.emplace_back(c);
  }

  unsigned order() const { return order_; }
  unsigned degree() const { return static_cast<unsigned>(modulus_.size() - 1); }
  const detail::QPoly& modulus() const { return modulus_; }

  /// Remainder modulo Phi_e, padded to exactly degree() coefficients.
  std::vector<Rational> reduce(detail::QPoly p) const {
    detail::trim(p);
    if (detail::degree(p) >= static_cast<int>(degree())) p = detail::divmod(std::move(p), modulus_).second;
    p.resize(degree());
    return p;
  }

 private:
  unsigned order_;
  detail::QPoly modulus_;
};

/// Element of Q(zeta_e) as its reduced coefficient vector (length phi(e)).
class CycloElem {
 public:
  CycloElem(std::shared_ptr<const CycloField> field, const Rational& c) : field_(std::move(field)) {
    coeffs_.assign(field_->degree(), Rational(0));
    coeffs_[0] = c;
  }

  CycloElem(std::shared_ptr<const CycloField> field, detail::QPoly poly) : field_(std::move(field)) {
    coeffs_ = field_->reduce(std::move(poly));
  }

  /// omega^k for any integer k (negative allowed).
  static CycloElem root_power(std::shared_ptr<const CycloField> field, long long k) {
    const long long e = field->order();
    detail::QPoly p(static_cast<std::size_t>(((k % e) + e) % e) + 1);
    p.back() = 1;
    return CycloElem(std::move(field), std::move(p));
  }

  const CycloField& field() const { return *field_; }
  const std::shared_ptr<const CycloField>& field_ptr() const { return field_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      if (!coeffs_[i].is_zero()) return false;
    }
    return true;
  }

  /// Coerces to Q; an irrational element here means a broken identity.
  Rational to_rational() const {
    if (!is_rational()) throw InternalInconsistency("CycloElem: element is not rational");
    return coeffs_[0];
  }

  CycloElem& operator+=(const CycloElem& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  CycloElem& operator-=(const CycloElem& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  CycloElem& operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(CycloElem a, const Rational& s) { return a *= s; }
  friend CycloElem operator*(const CycloElem& a, const CycloElem& b) {
    a.check_same(b);
    detail::QPoly pa(a.coeffs_), pb(b.coeffs_);
    detail::trim(pa);
    detail::trim(pb);
    return CycloElem(a.field_, detail::mul(pa, pb));
  }

  /// Multiplicative inverse via extended Euclid against Phi_e.
  CycloElem inverse() const {
    detail::QPoly r0 = field_->modulus();
    detail::QPoly r1(coeffs_);
    detail::trim(r1);
    if (r1.empty()) throw InvalidArgument("CycloElem: inverse of zero");
    detail::QPoly s0, s1{Rational(1)};
    while (detail::degree(r1) > 0) {
      auto [q, r] = detail::divmod(r0, r1);
      detail::QPoly s = detail::sub(s0, detail::mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    // Phi_e is irreducible, so the last nonzero remainder is a unit.
    if (r1.empty()) throw InternalInconsistency("CycloElem: element shares a factor with Phi_e");
    return CycloElem(field_, std::move(s1)) * (Rational(1) / r1[0]);
  }

  friend CycloElem operator/(const CycloElem& a, const CycloElem& b) { return a * b.inverse(); }

  friend bool operator==(const CycloElem& a, const CycloElem& b) {
    return a.field_->order() == b.field_->order() && a.coeffs_ == b.coeffs_;
  }

  /// One step of multiplication by omega: shift up and fold the top term back.
  CycloElem times_root() const {
    const auto& m = field_->modulus();
    const std::size_t n = coeffs_.size();
    CycloElem out(*this);
    Rational top = coeffs_[n - 1];
    for (std::size_t i = n - 1; i > 0; --i) out.coeffs_[i] = coeffs_[i - 1];
    out.coeffs_[0] = Rational(0);
    if (!top.is_zero()) {
      for (std::size_t i = 0; i < n; ++i) out.coeffs_[i] -= top * m[i];
    }
    return out;
  }

 private:
  void check_same(const CycloElem& o) const {
    if (field_->order() != o.field_->order()) throw InvalidArgument("CycloElem: mixed cyclotomic fields");
  }

  std::shared_ptr<const CycloField> field_;
  std::vector<Rational> coeffs_;
};

/// The products a * omega^j for j = 0 .. e-1, so that multiplying a by any
/// power of omega is a lookup.
class PowerOrbit {
 public:
  explicit PowerOrbit(const CycloElem& a) {
    const unsigned e = a.field().order();
    orbit_.reserve(e);
    orbit_.push_back(a);
    for (unsigned j = 1; j < e; ++j) orbit_.push_back(orbit_.back().times_root());
  }

  const CycloElem& operator[](long long j) const {
    const long long e = static_cast<long long>(orbit_.size());
    return orbit_[static_cast<std::size_t>(((j % e) + e) % e)];
  }

 private:
  std::vector<CycloElem> orbit_;
};

/// Sums over the nontrivial e-th roots of unity omega^i, i = 1 .. e-1, each
/// evaluated term by term in Q(zeta_e). Construction inverts omega^i - 1 and
/// 1 - omega^{-i} once per i; the sums then only add field elements.
class RootSums {
 public:
  explicit RootSums(unsigned e) : field_(std::make_shared<const CycloField>(check_order(e))), powers_(one()) {
    const auto one_elem = one();
    for (unsigned i = 1; i < e; ++i) {
      const auto w = CycloElem::root_power(field_, i);
      const auto w_inv = CycloElem::root_power(field_, -static_cast<long long>(i));
      inv_root_minus_one_.emplace_back((w - one_elem).inverse());
      inv_one_minus_conj_.emplace_back((one_elem - w_inv).inverse());
    }
  }

  unsigned order() const { return field_->order(); }
  const std::shared_ptr<const CycloField>& field() const { return field_; }

  /// omega^k, any integer k.
  const CycloElem& root_power(long long k) const { return powers_[k]; }

  /// (omega^{id} - 1) / (omega^i - 1), 0 < i < e, by field division.
  CycloElem quotient(long long i, long long d) const {
    const long long e = order();
    if (i <= 0 || i >= e) throw InvalidArgument("quotient: i must lie in (0, e)");
    const auto& orbit = inv_root_minus_one_[static_cast<std::size_t>(i - 1)];
    return orbit[i * d] - orbit[0];
  }

  /// sum_{i=1}^{e-1} omega^{ik}; -1 for 0 < k < e, e - 1 for k = 0.
  Rational geometric(long long k) const {
    if (k < 0 || k >= static_cast<long long>(order())) {
      throw InvalidArgument("geometric_sum: k must lie in [0, e)");
    }
    CycloElem acc(field_, Rational(0));
    for (unsigned i = 1; i < order(); ++i) acc += powers_[i * k];
    return acc.to_rational();
  }

  /// sum_{i=1}^{e-1} 1/(omega^i - 1) = -(e-1)/2.
  Rational inverse() const {
    CycloElem acc(field_, Rational(0));
    for (const auto& orbit : inv_root_minus_one_) acc += orbit[0];
    return acc.to_rational();
  }

  /// sum_{i=1}^{e-1} (omega^{id} - 1)/(omega^i - 1) = e - d, for 0 < d < e.
  Rational ratio(long long d) const {
    if (d <= 0 || d >= static_cast<long long>(order())) throw InvalidArgument("ratio_sum: d must lie in (0, e)");
    CycloElem acc(field_, Rational(0));
    for (long long i = 1; i < static_cast<long long>(order()); ++i) acc += quotient(i, d);
    return acc.to_rational();
  }

  /// sum_{i=1}^{e-1} omega^{id}/(omega^i - 1) = (e - 2d + 1)/2, for 0 < d <= e.
  Rational shifted(long long d) const {
    if (d <= 0 || d > static_cast<long long>(order())) throw InvalidArgument("shifted_sum: d must lie in (0, e]");
    CycloElem acc(field_, Rational(0));
    for (unsigned i = 1; i < order(); ++i) acc += inv_root_minus_one_[i - 1][i * d];
    return acc.to_rational();
  }

  /// (1/e) * omega^{id} / (1 - omega^{-i}): the contribution of the inertia
  /// component labelled omega^i to the integral of N^d.
  CycloElem inertia_term(long long d, long long i) const {
    const long long e = order();
    if (i % e == 0) throw InvalidArgument("inertia_term: i = 0 mod e makes the denominator vanish");
    if (i <= 0 || i >= e) throw InvalidArgument("inertia_term: i must lie in (0, e)");
    if (d < 0 || d >= e) throw InvalidArgument("inertia_term: d must lie in [0, e)");
    return inv_one_minus_conj_[static_cast<std::size_t>(i - 1)][i * d] * Rational(1, e);
  }

  /// sum over i of inertia_term(d, i); closed form (e - 1 - 2d)/(2e).
  Rational inertia_total(long long d) const {
    const long long e = order();
    if (e == 1) return Rational(0);
    if (d < 0 || d >= e) throw InvalidArgument("inertia_total: d must lie in [0, e)");
    CycloElem acc(field_, Rational(0));
    for (long long i = 1; i < e; ++i) acc += inertia_term(d, i);
    return acc.to_rational();
  }

 private:
  static unsigned check_order(unsigned e) {
    if (e == 0) throw InvalidArgument("RootSums: order must be >= 1");
    return e;
  }
  CycloElem one() const { return CycloElem(field_, Rational(1)); }

  std::shared_ptr<const CycloField> field_;
  PowerOrbit powers_;
  std::vector<PowerOrbit> inv_root_minus_one_;  // index i-1: orbit of 1/(omega^i - 1)
  std::vector<PowerOrbit> inv_one_minus_conj_;  // index i-1: orbit of 1/(1 - omega^{-i})
};

inline Rational geometric_sum(unsigned e, long long k) {
  if (e < 2) throw InvalidArgument("geometric_sum: e must be >= 2");
  return RootSums(e).geometric(k);
}

inline Rational inverse_sum(unsigned e) {
  if (e < 2) throw InvalidArgument("inverse_sum: e must be >= 2");
  return RootSums(e).inverse();
}

inline Rational ratio_sum(unsigned e, long long d) {
  if (e < 2) throw InvalidArgument("ratio_sum: e must be >= 2");
  return RootSums(e).ratio(d);
}

inline Rational shifted_sum(unsigned e, long long d) {
  if (e < 2) throw InvalidArgument("shifted_sum: e must be >= 2");
  return RootSums(e).shifted(d);
}

inline CycloElem inertia_term(unsigned e, long long d, long long i) {
  if (e < 2) throw InvalidArgument("inertia_term: e must be >= 2");
  return RootSums(e).inertia_term(d, i);
}

inline Rational inertia_total(unsigned e, long long d) {
  if (e == 0) throw InvalidArgument("inertia_total: e must be >= 1");
  if (e == 1) return Rational(0);
  return RootSums(e).inertia_total(d);
}

}  // namespace parab
