/// @file moduli_bounds.hpp
/// @brief Essential-dimension bounds for moduli of parabolic bundles: the
///        generic gerbe index, gerbe contributions, residual-gerbe bounds,
///        nilpotent-endomorphism stack dimension and transcendence-degree
///        bounds for fields of moduli.
#pragma once

#include "parab/exact_arith.hpp"
#include "parab/parabolic.hpp"

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace parab {

/// h = gcd(r, |d|, n_ij) over interior weights 0 < j < e_i.
inline std::uint64_t gerbe_index(const ParabolicBundle& b) {
  std::vector<std::uint64_t> xs{static_cast<std::uint64_t>(b.rank()),
                                static_cast<std::uint64_t>(std::llabs(b.degree()))};
  for (const auto& p : b.points()) {
    for (unsigned j = 1; j < p.ramification(); ++j) xs.push_back(static_cast<std::uint64_t>(p.weights[j]));
  }
  return gcd_list(xs);
}

/// Upper bound sum_{p^a || n} (p^a - 1) for a G_m-gerbe of index n.
inline std::uint64_t gerbe_ed_upper(std::uint64_t n) {
  std::uint64_t total = 0;
  for (const auto& [p, a] : factorize(n)) total += ipow(p, a) - 1;
  return total;
}

/// p^{v_p(n)} - 1.
inline std::uint64_t gerbe_ed_p(std::uint64_t n, std::uint64_t p) { return ipow(p, valuation(n, p)) - 1; }

inline long long residual_ed_bound(long long r) {
  if (r < 1) throw InvalidArgument("residual_ed_bound: rank must be >= 1");
  return r - 1;
}

/// Literal v_p(r) - 1, which is -1 when p does not divide r.
struct ResidualPBound {
  long long value;
  bool negative() const { return value < 0; }
};

inline ResidualPBound residual_ed_p_bound(long long r, std::uint64_t p) {
  if (r < 1) throw InvalidArgument("residual_ed_p_bound: rank must be >= 1");
  return {static_cast<long long>(valuation(static_cast<std::uint64_t>(r), p)) - 1};
}

/// One graded piece im(theta^{i-1}) / im(theta^i) of a nilpotent
/// endomorphism: its rank and its datum at every point of the curve.
struct GradedPiece {
  long long rank;
  std::vector<Weights> weights;
};

/// (g - 1) sum r_i^2 + sum_i sum_j f_j dim Flag_{n_j^{(i)}}.
inline long long nil_dimension(long long g, std::span<const GradedPiece> pieces, std::span<const long long> f_list) {
  if (pieces.empty()) throw InvalidArgument("nil_dimension: need at least one graded piece");
  long long sum_sq = 0;
  long long flags = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& piece = pieces[i];
    if (piece.rank < 1) throw InvalidArgument("nil_dimension: piece rank must be >= 1");
    if (piece.weights.size() != f_list.size()) {
      throw InvalidArgument("nil_dimension: piece " + std::to_string(i) + " has " +
                            std::to_string(piece.weights.size()) + " data for " + std::to_string(f_list.size()) +
                            " points");
    }
    for (std::size_t j = 0; j < piece.weights.size(); ++j) {
      const auto& w = piece.weights[j];
      if (w.rank() != piece.rank) {
        throw InvalidArgument("nil_dimension: piece " + std::to_string(i) + " at point " + std::to_string(j) +
                              " has n_0 = " + std::to_string(w.rank()) + " != rank " + std::to_string(piece.rank));
      }
      if (w.ramification() != pieces[0].weights[j].ramification()) {
        throw InvalidArgument("nil_dimension: ramification at point " + std::to_string(j) + " differs between pieces");
      }
      flags += f_list[j] * flag_dim(w);
    }
    sum_sq += piece.rank * piece.rank;
  }
  return (g - 1) * sum_sq + flags;
}

/// Bound on trdeg k(E) for indecomposable E: 1 + (g - 1) sum r_i^2 + flag total.
inline long long trdeg_bound_indecomposable(long long g, std::span<const long long> piece_ranks, long long flag_total) {
  if (piece_ranks.empty()) throw InvalidArgument("trdeg_bound_indecomposable: need at least one piece rank");
  long long sum_sq = 0;
  for (long long r : piece_ranks) {
    if (r < 1) throw InvalidArgument("trdeg_bound_indecomposable: piece ranks must be >= 1");
    sum_sq += r * r;
  }
  return 1 + (g - 1) * sum_sq + flag_total;
}

/// Bound on trdeg k(E) for E with a non-scalar endomorphism; needs g >= 2, r >= 2.
inline long long trdeg_bound_nonsimple(long long g, long long r, long long flag_total) {
  if (g < 2) throw HypothesisViolation("trdeg_bound_nonsimple: requires genus >= 2, got " + std::to_string(g));
  if (r < 2) throw HypothesisViolation("trdeg_bound_nonsimple: requires rank >= 2, got " + std::to_string(r));
  return (g - 1) * (r * r - r) + 2 + flag_total;
}

/// Itemized essential-dimension value: total = base + flag_total + gerbe_term.
struct EdReport {
  std::uint64_t h;
  long long base;  // r^2 (g - 1) + 1
  long long flag_total;
  long long gerbe_term;
  long long total;
  /// Set for the ed_p report.
  std::optional<std::uint64_t> prime;
  /// True when equality with ed is conditional on the index conjecture for
  /// G_m-gerbes (the upper bound); the ed_p value is unconditional.
  bool conjectural;
};

namespace detail {

inline EdReport ed_base(const ParabolicBundle& b, const char* who) {
  if (b.genus() < 2) {
    throw HypothesisViolation(std::string(who) + ": requires coarse genus >= 2, got " + std::to_string(b.genus()));
  }
  EdReport rep{};
  rep.h = gerbe_index(b);
  rep.base = b.rank() * b.rank() * (b.genus() - 1) + 1;
  rep.flag_total = weighted_flag_total(b.points());
  return rep;
}

}  // namespace detail

/// ed Bun <= r^2 (g - 1) + 1 + sum f_i dim Flag + sum_{p | h} (p^{v_p(h)} - 1).
inline EdReport ed_upper_bound(const ParabolicBundle& b) {
  EdReport rep = detail::ed_base(b, "ed_upper_bound");
  rep.gerbe_term = static_cast<long long>(gerbe_ed_upper(rep.h));
  rep.total = rep.base + rep.flag_total + rep.gerbe_term;
  rep.conjectural = true;
  return rep;
}

/// ed_p Bun = r^2 (g - 1) + 1 + sum f_i dim Flag + p^{v_p(h)} - 1.
inline EdReport ed_p_value(const ParabolicBundle& b, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument("ed_p_value: " + std::to_string(p) + " is not prime");
  EdReport rep = detail::ed_base(b, "ed_p_value");
  rep.gerbe_term = static_cast<long long>(gerbe_ed_p(rep.h, p));
  rep.total = rep.base + rep.flag_total + rep.gerbe_term;
  rep.prime = p;
  rep.conjectural = false;
  return rep;
}

}  // namespace parab
