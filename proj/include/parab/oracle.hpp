/// @file oracle.hpp
/// @brief Seeded instance generators and independent second routes for every
///        closed form in the library, collected into VerificationReports.
#pragma once

#include "parab/cyclotomic.hpp"
#include "parab/exact_arith.hpp"
#include "parab/moduli_bounds.hpp"
#include "parab/parabolic.hpp"
#include "parab/riemann_roch.hpp"

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace parab {

/// 64-bit linear congruential generator (Knuth's MMIX constants):
///
///   state <- state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
///   output = state >> 32                                        (after stepping)
///
/// The initial state is the seed. Kept this small so random cases can be
/// reproduced bit-for-bit by other implementations.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint32_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::uint32_t>(state_ >> 32);
  }

  /// Uniform in [0, n), n >= 1, by rejection of the biased tail.
  std::uint32_t below(std::uint32_t n) {
    if (n == 0) throw InvalidArgument("Lcg64::below: empty range");
    const std::uint64_t span = 1ULL << 32;
    const std::uint64_t limit = span - span % n;
    for (;;) {
      const std::uint64_t x = next();
      if (x < limit) return static_cast<std::uint32_t>(x % n);
    }
  }

  /// Uniform in [lo, hi].
  long long between(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint32_t>(hi - lo + 1)));
  }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

/// Uniform weights with n_0 = r, n_e = 0: the jumps are a uniform weak
/// composition of r into e parts (e - 1 bars among r + e - 1 slots, chosen by
/// selection sampling).
inline Weights random_weights(unsigned e, long long r, Lcg64& rng) {
  if (e < 1) throw InvalidArgument("random_weights: e must be >= 1");
  if (r < 1) throw InvalidArgument("random_weights: r must be >= 1");
  const long long slots = r + e - 1;
  long long bars_left = e - 1;
  std::vector<long long> delta(e, 0);
  std::size_t part = 0;
  for (long long t = 0; t < slots; ++t) {
    const bool bar = static_cast<long long>(rng.below(static_cast<std::uint32_t>(slots - t))) < bars_left;
    if (bar) {
      --bars_left;
      ++part;
    } else {
      ++delta[part];
    }
  }
  std::vector<long long> n(e + 1, 0);
  for (long long k = e - 1; k >= 0; --k) n[k] = n[k + 1] + delta[k];
  return Weights(std::move(n));
}

inline Weights random_weights(unsigned e, long long r, std::uint64_t seed) {
  Lcg64 rng(seed);
  return random_weights(e, r, rng);
}

/// Parameter box for random bundles (all bounds inclusive).
struct BundleRanges {
  long long genus_min = 0;
  long long genus_max = 5;
  long long points_max = 3;
  long long ramification_max = 8;
  long long residue_degree_max = 3;
  long long rank_max = 6;
  long long degree_abs_max = 12;
};

inline ParabolicBundle random_bundle(Lcg64& rng, const BundleRanges& box = {}) {
  const long long g = rng.between(box.genus_min, box.genus_max);
  const long long r = rng.between(1, box.rank_max);
  const long long d = rng.between(-box.degree_abs_max, box.degree_abs_max);
  const long long l = rng.between(0, box.points_max);
  OrbifoldCurve curve{g, {}};
  for (long long i = 0; i < l; ++i) {
    const long long f = rng.between(1, box.residue_degree_max);
    const auto e = static_cast<unsigned>(rng.between(1, box.ramification_max));
    curve.points.emplace_back(f, random_weights(e, r, rng));
  }
  return ParabolicBundle(std::move(curve), r, d);
}

/// sum_{i<j} delta_i delta_j, from raw entry differences (no call into the
/// flag_dim formula or jumps()).
inline long long brute_flag_dim(const Weights& w) {
  const auto n = w.entries();
  long long total = 0;
  for (std::size_t i = 0; i + 1 < n.size(); ++i) {
    for (std::size_t j = i + 1; j + 1 < n.size(); ++j) total += (n[i] - n[i + 1]) * (n[j] - n[j + 1]);
  }
  return total;
}

struct VerificationFailure {
  std::string parameters;
  std::string expected;
  std::string got;
};

struct VerificationReport {
  std::string identity;
  std::string range;
  long long cases = 0;
  std::vector<VerificationFailure> failures;

  bool pass() const { return failures.empty(); }

  template <class A, class B>
  void check(const std::string& params, const A& expected, const B& got) {
    ++cases;
    if (!(expected == got)) failures.push_back({params, to_text(expected), to_text(got)});
  }

  void absorb(const VerificationReport& other) {
    cases += other.cases;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }

 private:
  template <class T>
  static std::string to_text(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
  }
};

namespace detail {

inline std::string describe(const Weights& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.entries().size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + "]";
}

inline std::string describe(const ParabolicBundle& b) {
  std::string s = "g=" + std::to_string(b.genus()) + " r=" + std::to_string(b.rank()) +
                  " d=" + std::to_string(b.degree()) + " points=[";
  for (std::size_t i = 0; i < b.points().size(); ++i) {
    s += (i ? " " : "") + std::string("f=") + std::to_string(b.points()[i].f) + ":" + describe(b.points()[i].weights);
  }
  return s + "]";
}

/// Caches one RootSums per ramification index during a sweep.
class RootSumsCache {
 public:
  const RootSums& get(unsigned e) {
    auto it = cache_.find(e);
    if (it == cache_.end()) it = cache_.emplace(e, RootSums(e)).first;
    return it->second;
  }

 private:
  std::map<unsigned, RootSums> cache_;
};

}  // namespace detail

/// sum_d d (m_d - m_{d+1}) / e for m = hom_datum(w) against flag_dim(w), and
/// flag_dim against brute_flag_dim; also m_0 = n_0^2.
inline VerificationReport verify_hom_identity(const Weights& w) {
  VerificationReport rep{"hom_datum_flag_identity", "weights " + detail::describe(w), 0, {}};
  const Weights m = hom_datum(w);
  const long long e = w.ramification();
  Rational weighted(0);
  for (long long d = 0; d < e; ++d) weighted += Rational(d * (m[d] - m[d + 1]), e);
  const std::string p = detail::describe(w);
  rep.check(p + " sum d(m_d-m_{d+1})/e vs flag_dim", Rational(flag_dim(w)), weighted);
  rep.check(p + " flag_dim vs brute_flag_dim", brute_flag_dim(w), flag_dim(w));
  rep.check(p + " m_0 vs n_0^2", w.rank() * w.rank(), m.rank());
  return rep;
}

/// The five root-of-unity identities for every 2 <= e <= e_max, each side
/// evaluated by term-by-term summation in Q(zeta_e):
///   sum_{i=1}^{e-1} omega^{ik}                   = -1 (0 < k < e), e - 1 (k = 0)
///   sum_{i=1}^{e-1} 1/(omega^i - 1)              = -(e - 1)/2
///   (omega^{id} - 1)/(omega^i - 1)               = sum_{j<d} omega^{ij}      (d > 0)
///   sum_{i=1}^{e-1} (omega^{id} - 1)/(omega^i - 1) = e - d                   (0 < d < e)
///   sum_{i=1}^{e-1} omega^{id}/(omega^i - 1)     = (e - 2d + 1)/2            (0 < d <= e)
inline VerificationReport verify_cyclotomic_suite(unsigned e_max) {
  if (e_max < 2) throw InvalidArgument("verify_cyclotomic_suite: e_max must be >= 2");
  VerificationReport rep{"cyclotomic_identities", "2 <= e <= " + std::to_string(e_max), 0, {}};
  for (unsigned e = 2; e <= e_max; ++e) {
    const RootSums sums(e);
    const long long ee = e;
    const std::string pe = "e=" + std::to_string(e);
    for (long long k = 0; k < ee; ++k) {
      rep.check(pe + " geometric k=" + std::to_string(k), Rational(k == 0 ? ee - 1 : -1), sums.geometric(k));
    }
    rep.check(pe + " inverse", Rational(-(ee - 1), 2), sums.inverse());
    for (long long i = 1; i < ee; ++i) {
      CycloElem telescoped(sums.field(), Rational(0));
      for (long long d = 1; d <= ee; ++d) {
        telescoped += sums.root_power(i * (d - 1));
        ++rep.cases;
        if (!(sums.quotient(i, d) == telescoped)) {
          rep.failures.push_back({pe + " telescoping i=" + std::to_string(i) + " d=" + std::to_string(d),
                                  "sum_{j<d} omega^{ij}", "mismatch in Q(zeta_e)"});
        }
      }
    }
    for (long long d = 1; d < ee; ++d) rep.check(pe + " ratio d=" + std::to_string(d), Rational(ee - d), sums.ratio(d));
    for (long long d = 1; d <= ee; ++d) {
      rep.check(pe + " shifted d=" + std::to_string(d), Rational(ee - 2 * d + 1, 2), sums.shifted(d));
    }
  }
  return rep;
}

/// sum_{i=1}^{e-1} (1/e) omega^{id}/(1 - omega^{-i}) = (e - 1 - 2d)/(2e).
inline VerificationReport verify_inertia_totals(unsigned e_max) {
  if (e_max < 2) throw InvalidArgument("verify_inertia_totals: e_max must be >= 2");
  VerificationReport rep{"inertia_totals", "2 <= e <= " + std::to_string(e_max) + ", 0 <= d < e", 0, {}};
  for (unsigned e = 2; e <= e_max; ++e) {
    const RootSums sums(e);
    const long long ee = e;
    for (long long d = 0; d < ee; ++d) {
      CycloElem acc(sums.field(), Rational(0));
      for (long long i = 1; i < ee; ++i) acc += sums.inertia_term(d, i);
      const std::string p = "e=" + std::to_string(e) + " d=" + std::to_string(d);
      ++rep.cases;
      if (!acc.is_rational()) {
        rep.failures.push_back({p, "rational", "irrational sum"});
        continue;
      }
      rep.check(p, Rational(ee - 1 - 2 * d, 2 * ee), acc.to_rational());
    }
  }
  return rep;
}

namespace detail {

inline void chi_two_routes(const ParabolicBundle& b, RootSumsCache& cache, VerificationReport& rep) {
  const ChiReport chi = euler_char(b);
  const auto shapes = point_shapes(b);
  Rational assembled = global_term(chi.stacky_degree, b.rank(), b.genus(), shapes);
  for (const auto& p : b.points()) assembled += Rational(p.f) * inertia_bundle_total(p, cache.get(p.ramification()));
  const std::string s = describe(b);
  rep.check(s + " global+inertia vs chi", chi.chi, assembled);
  rep.check(s + " chi vs d+(1-g)r", Rational(b.degree() + (1 - b.genus()) * b.rank()), chi.chi);
}

}  // namespace detail

/// (i) global term + sum f_i inertia totals = chi, (ii) chi = d + (1 - g) r.
inline VerificationReport verify_chi_two_routes(const ParabolicBundle& b) {
  VerificationReport rep{"chi_two_routes", "bundle " + detail::describe(b), 0, {}};
  detail::RootSumsCache cache;
  detail::chi_two_routes(b, cache, rep);
  return rep;
}

/// Powers N^i of the root line bundle at a single point of residue degree f:
/// the datum is root_line_datum(i, e) with underlying degree floor(i/e) f.
/// Checks deg N^i = f i / e, chi(N^i) = 1 - g for 0 <= i < e, and both chi
/// routes, for 1 <= e <= e_max and 0 <= i < 2e.
inline VerificationReport verify_root_lines(unsigned e_max, long long g, long long f = 1) {
  VerificationReport rep{"root_line_bundles",
                         "1 <= e <= " + std::to_string(e_max) + ", 0 <= i < 2e, g=" + std::to_string(g) +
                             ", f=" + std::to_string(f),
                         0,
                         {}};
  detail::RootSumsCache cache;
  for (unsigned e = 1; e <= e_max; ++e) {
    const long long ee = e;
    for (long long i = 0; i < 2 * ee; ++i) {
      OrbifoldCurve curve{g, {}};
      curve.points.emplace_back(f, root_line_datum(i, e));
      const ParabolicBundle n(std::move(curve), 1, (i / ee) * f);
      const std::string s = "e=" + std::to_string(e) + " i=" + std::to_string(i);
      rep.check(s + " stacky degree", Rational(f * i, ee), stacky_degree(n));
      if (i < ee) rep.check(s + " chi", Rational(1 - g), euler_char(n).chi);
      detail::chi_two_routes(n, cache, rep);
    }
  }
  return rep;
}

/// chi(End F) closed form against chi of the hom-datum bundle of stacky degree 0.
inline VerificationReport verify_end_chi_two_routes(const ParabolicBundle& b) {
  VerificationReport rep{"end_chi_two_routes", "bundle " + detail::describe(b), 0, {}};
  const ParabolicBundle end = endomorphism_bundle(b);
  const std::string s = detail::describe(b);
  rep.check(s + " stacky degree of End", Rational(0), stacky_degree(end));
  rep.check(s + " closed form vs hom-datum bundle", end_euler_char(b), euler_char(end).chi);
  return rep;
}

/// ed_p <= ed upper bound for every prime p | h, and the gerbe upper bound
/// equals the sum of its p-parts.
inline VerificationReport verify_ed_consistency(const ParabolicBundle& b) {
  VerificationReport rep{"ed_consistency", "bundle " + detail::describe(b), 0, {}};
  const EdReport upper = ed_upper_bound(b);
  const std::string s = detail::describe(b);
  std::uint64_t parts = 0;
  for (const auto& [p, a] : factorize(upper.h)) {
    const EdReport at_p = ed_p_value(b, p);
    rep.check(s + " ed_p <= ed p=" + std::to_string(p), true, at_p.total <= upper.total);
    parts += gerbe_ed_p(upper.h, p);
  }
  rep.check(s + " gerbe_ed_upper(h) = sum_p gerbe_ed_p(h, p)", gerbe_ed_upper(upper.h), parts);
  return rep;
}

/// Seeded sweeps over the generators above.
struct SweepOptions {
  long long count;
  std::uint64_t seed;
};

inline VerificationReport sweep_hom_identity(SweepOptions opt, unsigned e_max = 12, long long r_max = 10) {
  VerificationReport rep{"hom_datum_flag_identity",
                         std::to_string(opt.count) + " random weights, e <= " + std::to_string(e_max) +
                             ", r <= " + std::to_string(r_max) + ", seed " + std::to_string(opt.seed),
                         0,
                         {}};
  Lcg64 rng(opt.seed);
  for (long long k = 0; k < opt.count; ++k) {
    const auto e = static_cast<unsigned>(rng.between(1, e_max));
    const long long r = rng.between(1, r_max);
    rep.absorb(verify_hom_identity(random_weights(e, r, rng)));
  }
  return rep;
}

inline VerificationReport sweep_chi_two_routes(SweepOptions opt, const BundleRanges& box = {}) {
  VerificationReport rep{"chi_two_routes",
                         std::to_string(opt.count) + " random bundles, g <= " + std::to_string(box.genus_max) +
                             ", l <= " + std::to_string(box.points_max) + ", e <= " +
                             std::to_string(box.ramification_max) + ", seed " + std::to_string(opt.seed),
                         0,
                         {}};
  Lcg64 rng(opt.seed);
  detail::RootSumsCache cache;
  for (long long k = 0; k < opt.count; ++k) detail::chi_two_routes(random_bundle(rng, box), cache, rep);
  return rep;
}

inline VerificationReport sweep_end_chi(SweepOptions opt, const BundleRanges& box = {}) {
  VerificationReport rep{"end_chi_two_routes",
                         std::to_string(opt.count) + " random bundles, seed " + std::to_string(opt.seed), 0, {}};
  Lcg64 rng(opt.seed);
  for (long long k = 0; k < opt.count; ++k) rep.absorb(verify_end_chi_two_routes(random_bundle(rng, box)));
  return rep;
}

inline VerificationReport sweep_ed_consistency(SweepOptions opt, BundleRanges box = {}) {
  if (box.genus_min < 2) box.genus_min = 2;
  if (box.genus_max < box.genus_min) box.genus_max = box.genus_min;
  VerificationReport rep{"ed_consistency",
                         std::to_string(opt.count) + " random bundles, g >= 2, seed " + std::to_string(opt.seed), 0,
                         {}};
  Lcg64 rng(opt.seed);
  for (long long k = 0; k < opt.count; ++k) rep.absorb(verify_ed_consistency(random_bundle(rng, box)));
  return rep;
}

}  // namespace parab
