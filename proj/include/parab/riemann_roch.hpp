/// @file riemann_roch.hpp
/// @brief Orbifold Riemann-Roch on a root stack over a curve.
///
/// A bundle F is keyed by the integer degree d of q_* F (q the coarse map).
/// Its stacky degree is d + sum_i f_i c_i with the per-point correction
/// c_i = sum_d d (n_{i,d} - n_{i,d+1}) / e_i, and
///
///   chi(F) = deg(F) + (1 - g) rk(F) - sum_i f_i c_i = d + (1 - g) rk(F).
///
/// The same value is reassembled from the Todd-class integral over the stack
/// (global_term) and the inertia contributions (inertia_bundle_total).
#pragma once

#include "parab/cyclotomic.hpp"
#include "parab/exact_arith.hpp"
#include "parab/parabolic.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace parab {

struct ChiReport {
  Rational chi;
  Rational stacky_degree;
  /// stacky_degree + (1 - g) r
  Rational classical_part;
  /// (point index, correction without the residue-degree factor)
  std::vector<std::pair<std::size_t, Rational>> corrections;
};

/// sum_{d=0}^{e-1} d (n_d - n_{d+1}) / e.
inline Rational correction_term(const Weights& w) {
  const long long e = w.ramification();
  long long acc = 0;
  for (long long d = 0; d < e; ++d) acc += d * (w[d] - w[d + 1]);
  return Rational(acc, e);
}

inline Rational correction_term(const ParabolicPoint& p) { return correction_term(p.weights); }

inline Rational stacky_degree(const ParabolicBundle& b) {
  Rational deg(b.degree());
  for (const auto& p : b.points()) deg += Rational(p.f) * correction_term(p);
  return deg;
}

inline ChiReport euler_char(const ParabolicBundle& b) {
  ChiReport rep;
  rep.stacky_degree = stacky_degree(b);
  rep.classical_part = rep.stacky_degree + Rational((1 - b.genus()) * b.rank());
  rep.chi = rep.classical_part;
  for (std::size_t i = 0; i < b.points().size(); ++i) {
    const auto& p = b.points()[i];
    Rational c = correction_term(p);
    rep.chi -= Rational(p.f) * c;
    rep.corrections.emplace_back(i, std::move(c));
  }
  return rep;
}

/// Ramification data (f, e) of one point, as seen by global_term.
struct PointShape {
  long long f;
  long long e;
};

/// Integral of ch(F) td(X) over the stack:
/// deg + r (1 - g) + sum_i f_i r (1 - e_i) / (2 e_i).
inline Rational global_term(const Rational& deg, long long r, long long g, std::span<const PointShape> points) {
  Rational total = deg + Rational(r * (1 - g));
  for (const auto& [f, e] : points) {
    if (e < 1 || f < 1) throw InvalidArgument("global_term: need f >= 1 and e >= 1");
    total += Rational(f * r * (1 - e), 2 * e);
  }
  return total;
}

inline std::vector<PointShape> point_shapes(const ParabolicBundle& b) {
  std::vector<PointShape> out;
  for (const auto& p : b.points()) out.push_back({p.f, static_cast<long long>(p.ramification())});
  return out;
}

/// Inertia contribution at one point, without the residue-degree factor.
/// Restricted to the inertia components the bundle splits as
/// sum_d V_{chi^d}^{delta_d}, so the total is sum_d delta_d inertia_total(e, d),
/// evaluated in Q(zeta_e).
inline Rational inertia_bundle_total(const ParabolicPoint& p, const RootSums& sums) {
  if (sums.order() != p.ramification()) throw InvalidArgument("inertia_bundle_total: field order mismatch");
  const auto delta = jumps(p.weights);
  Rational total(0);
  for (std::size_t d = 0; d < delta.size(); ++d) {
    if (delta[d] != 0) total += Rational(delta[d]) * sums.inertia_total(static_cast<long long>(d));
  }
  return total;
}

inline Rational inertia_bundle_total(const ParabolicPoint& p) {
  return inertia_bundle_total(p, RootSums(p.ramification()));
}

/// chi(Hom(F, F)) = (1 - g) r^2 - sum_i f_i dim Flag_{n_i}.
inline Rational end_euler_char(const ParabolicBundle& b) {
  return Rational((1 - b.genus()) * b.rank() * b.rank() - weighted_flag_total(b.points()));
}

/// The bundle Hom(F, F): rank r^2, data hom_datum(n_i), stacky degree 0. Its
/// underlying degree is therefore -sum_i f_i correction(hom_datum(n_i)).
inline ParabolicBundle endomorphism_bundle(const ParabolicBundle& b) {
  OrbifoldCurve curve{b.genus(), {}};
  Rational shift(0);
  for (const auto& p : b.points()) {
    Weights m = hom_datum(p.weights);
    shift += Rational(p.f) * correction_term(m);
    curve.points.emplace_back(p.f, std::move(m));
  }
  if (!shift.is_integer()) throw InternalInconsistency("endomorphism_bundle: non-integral degree shift " + shift.str());
  return ParabolicBundle(std::move(curve), b.rank() * b.rank(), -shift.to_int64());
}

}  // namespace parab
