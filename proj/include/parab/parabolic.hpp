/// @file parabolic.hpp
/// @brief Parabolic data at orbifold points: weight vectors, their jumps,
///        flag-variety dimensions, the datum of the endomorphism bundle and
///        the data of powers of the root line bundle.
#pragma once

#include "parab/exact_arith.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace parab {

/// Malformed parabolic datum (not nonincreasing, not closed by 0, ...).
class InvalidWeights : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// The dimensions n_0 >= n_1 >= ... >= n_e = 0 of the flag at one point.
/// The closing 0 is stored, so a datum for ramification e has e + 1 entries.
class Weights {
 public:
  /// Validating constructor; see validate_weights.
  explicit Weights(std::vector<long long> entries) : n_(std::move(entries)) {
    if (n_.empty()) throw InvalidWeights("weights: empty datum");
    if (n_.size() < 2) throw InvalidWeights("weights: need at least n_0 and the closing n_e = 0");
    if (n_.back() != 0) throw InvalidWeights("weights: last entry must be 0, got " + std::to_string(n_.back()));
    for (std::size_t i = 0; i + 1 < n_.size(); ++i) {
      if (n_[i] < n_[i + 1]) {
        throw InvalidWeights("weights: not nonincreasing at position " + std::to_string(i));
      }
    }
  }

  /// Ramification index e.
  unsigned ramification() const { return static_cast<unsigned>(n_.size() - 1); }
  long long rank() const { return n_.front(); }
  long long operator[](std::size_t i) const { return n_[i]; }
  std::span<const long long> entries() const { return n_; }

  friend bool operator==(const Weights&, const Weights&) = default;

 private:
  std::vector<long long> n_;
};

inline Weights validate_weights(std::vector<long long> entries) { return Weights(std::move(entries)); }

/// delta_i = n_i - n_{i+1}, i = 0 .. e-1. Nonnegative, summing to n_0.
inline std::vector<long long> jumps(const Weights& w) {
  std::vector<long long> delta(w.ramification());
  for (std::size_t i = 0; i < delta.size(); ++i) delta[i] = w[i] - w[i + 1];
  return delta;
}

/// dim of the variety of flags of type w: sum_{i=1}^{e-1} n_i (n_{i-1} - n_i).
inline long long flag_dim(const Weights& w) {
  long long dim = 0;
  for (unsigned i = 1; i < w.ramification(); ++i) dim += w[i] * (w[i - 1] - w[i]);
  return dim;
}

/// Datum (m_0, ..., m_{e-1}, 0) of Hom(F, F) where F has datum w.
/// m_d = sum_{d <= lambda < e} c_lambda with c_lambda = sum_{i - j = lambda mod e} delta_i delta_j.
inline Weights hom_datum(const Weights& w) {
  const auto delta = jumps(w);
  const long long e = w.ramification();
  std::vector<long long> c(e, 0);
  for (long long i = 0; i < e; ++i) {
    for (long long j = 0; j < e; ++j) c[((i - j) % e + e) % e] += delta[i] * delta[j];
  }
  std::vector<long long> m(e + 1, 0);
  for (long long d = e - 1; d >= 0; --d) m[d] = m[d + 1] + c[d];
  return Weights(std::move(m));
}

/// Datum of N^i, N the root line bundle at a point of ramification e:
/// rank one with its single jump at l = i mod e.
inline Weights root_line_datum(long long i, unsigned e) {
  if (e == 0) throw InvalidArgument("root_line_datum: e must be >= 1");
  if (i < 0) throw InvalidArgument("root_line_datum: i must be >= 0");
  const long long l = i % e;
  std::vector<long long> n(e + 1, 0);
  for (long long k = 0; k <= l; ++k) n[k] = 1;
  return Weights(std::move(n));
}

/// One orbifold point: residue degree f, ramification e (implied by the
/// weights), parabolic datum.
struct ParabolicPoint {
  ParabolicPoint(long long residue_degree, Weights datum) : f(residue_degree), weights(std::move(datum)) {
    if (f < 1) throw InvalidArgument("point: residue degree must be >= 1");
  }

  unsigned ramification() const { return weights.ramification(); }

  long long f;
  Weights weights;
};

/// Coarse curve of genus g with the orbifold points of the root stack, in order.
struct OrbifoldCurve {
  long long genus = 0;
  std::vector<ParabolicPoint> points;
};

/// A parabolic bundle described by rank, underlying (integer) degree of
/// q_* F and its datum at every point.
class ParabolicBundle {
 public:
  ParabolicBundle(OrbifoldCurve curve, long long rank, long long degree)
      : curve_(std::move(curve)), rank_(rank), degree_(degree) {
    if (curve_.genus < 0) throw InvalidArgument("curve: genus must be >= 0");
    if (rank_ < 1) throw InvalidArgument("bundle: rank must be >= 1");
    for (std::size_t i = 0; i < curve_.points.size(); ++i) {
      if (curve_.points[i].weights.rank() != rank_) {
        throw InvalidArgument("bundle: weights at point " + std::to_string(i) + " start with " +
                              std::to_string(curve_.points[i].weights.rank()) + ", expected rank " +
                              std::to_string(rank_));
      }
    }
  }

  const OrbifoldCurve& curve() const { return curve_; }
  long long genus() const { return curve_.genus; }
  const std::vector<ParabolicPoint>& points() const { return curve_.points; }
  long long rank() const { return rank_; }
  long long degree() const { return degree_; }

 private:
  OrbifoldCurve curve_;
  long long rank_;
  long long degree_;
};

/// Sum over points of f_i * flag_dim(n_i).
inline long long weighted_flag_total(std::span<const ParabolicPoint> points) {
  long long total = 0;
  for (const auto& p : points) total += p.f * flag_dim(p.weights);
  return total;
}

/// Direct sum: ranks, degrees and weights add. Both bundles must live on the
/// same curve (same genus, residue degrees and ramification indices).
inline ParabolicBundle direct_sum(const ParabolicBundle& a, const ParabolicBundle& b) {
  if (a.genus() != b.genus() || a.points().size() != b.points().size()) {
    throw InvalidArgument("direct_sum: bundles live on different curves");
  }
  OrbifoldCurve curve{a.genus(), {}};
  for (std::size_t i = 0; i < a.points().size(); ++i) {
    const auto& pa = a.points()[i];
    const auto& pb = b.points()[i];
    if (pa.f != pb.f || pa.ramification() != pb.ramification()) {
      throw InvalidArgument("direct_sum: point " + std::to_string(i) + " differs");
    }
    std::vector<long long> n(pa.ramification() + 1);
    for (std::size_t k = 0; k < n.size(); ++k) n[k] = pa.weights[k] + pb.weights[k];
    curve.points.emplace_back(pa.f, Weights(std::move(n)));
  }
  return ParabolicBundle(std::move(curve), a.rank() + b.rank(), a.degree() + b.degree());
}

}  // namespace parab
