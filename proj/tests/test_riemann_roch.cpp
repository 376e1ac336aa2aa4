#include "parab/riemann_roch.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace parab;

namespace {

ParabolicBundle one_point(long long g, long long r, long long d, long long f, std::vector<long long> n) {
  OrbifoldCurve c{g, {}};
  c.points.emplace_back(f, Weights(std::move(n)));
  return ParabolicBundle(std::move(c), r, d);
}

Weights draw_weights(std::mt19937_64& gen, unsigned e, long long r) {
  std::uniform_int_distribution<long long> level(0, r);
  std::vector<long long> n(e + 1, 0);
  n[0] = r;
  for (unsigned i = 1; i < e; ++i) n[i] = level(gen);
  std::sort(n.begin() + 1, n.end() - 1, std::greater<>());
  return Weights(n);
}

ParabolicBundle draw_bundle(std::mt19937_64& gen, long long r, const OrbifoldCurve& shape) {
  OrbifoldCurve c{shape.genus, {}};
  for (const auto& p : shape.points) c.points.emplace_back(p.f, draw_weights(gen, p.ramification(), r));
  return ParabolicBundle(std::move(c), r, static_cast<long long>(gen() % 21) - 10);
}

OrbifoldCurve draw_curve(std::mt19937_64& gen) {
  OrbifoldCurve c{static_cast<long long>(gen() % 6), {}};
  const auto l = gen() % 4;
  for (std::size_t i = 0; i < l; ++i) {
    const unsigned e = 1 + gen() % 8;
    std::vector<long long> n(e + 1, 0);
    n[0] = 1;
    c.points.emplace_back(1 + static_cast<long long>(gen() % 3), Weights(n));
  }
  return c;
}

}  // namespace

TEST(CorrectionTerm, Examples) {
  EXPECT_EQ(correction_term(Weights({2, 1, 1, 0})), Rational(2, 3));
  EXPECT_EQ(correction_term(Weights({4, 0, 0, 0, 0})), Rational(0));
  EXPECT_EQ(correction_term(Weights({2, 1, 0})), Rational(1, 2));
}

TEST(StackyDegree, Examples) {
  EXPECT_EQ(stacky_degree(ParabolicBundle(OrbifoldCurve{2, {}}, 3, 5)), Rational(5));
  EXPECT_EQ(stacky_degree(one_point(2, 1, 0, 1, {1, 1, 0})), Rational(1, 2));
  EXPECT_EQ(stacky_degree(one_point(2, 2, 1, 1, {2, 1, 1, 0})), Rational(5, 3));
  EXPECT_EQ(stacky_degree(one_point(2, 2, 1, 3, {2, 1, 1, 0})), Rational(3));
}

TEST(EulerChar, Examples) {
  EXPECT_EQ(euler_char(ParabolicBundle(OrbifoldCurve{2, {}}, 2, 3)).chi, Rational(1));

  const ChiReport rep = euler_char(one_point(2, 2, 1, 1, {2, 1, 1, 0}));
  EXPECT_EQ(rep.chi, Rational(-1));
  EXPECT_EQ(rep.stacky_degree, Rational(5, 3));
  EXPECT_EQ(rep.classical_part, Rational(-1, 3));
  ASSERT_EQ(rep.corrections.size(), 1u);
  EXPECT_EQ(rep.corrections[0].first, 0u);
  EXPECT_EQ(rep.corrections[0].second, Rational(2, 3));
}

TEST(EulerChar, RootLineBundles) {
  for (long long g = 0; g <= 4; ++g) {
    for (unsigned e = 1; e <= 10; ++e) {
      for (long long i = 0; i < e; ++i) {
        OrbifoldCurve c{g, {}};
        c.points.emplace_back(1, root_line_datum(i, e));
        const ParabolicBundle n(std::move(c), 1, 0);
        EXPECT_EQ(stacky_degree(n), Rational(i, e));
        EXPECT_EQ(euler_char(n).chi, Rational(1 - g));
      }
    }
  }
}

TEST(GlobalTerm, Examples) {
  EXPECT_EQ(global_term(Rational(7), 1, 3, {}), Rational(7 + 1 - 3));
  const std::vector<PointShape> one_e3{{1, 3}};
  EXPECT_EQ(global_term(Rational(5, 3), 2, 2, one_e3), Rational(-1));
  const std::vector<PointShape> one_e2{{1, 2}};
  EXPECT_EQ(global_term(Rational(0), 3, 0, one_e2), Rational(9, 4));
  const std::vector<PointShape> bad{{1, 0}};
  EXPECT_THROW(global_term(Rational(0), 1, 0, bad), InvalidArgument);
}

TEST(InertiaBundleTotal, Examples) {
  EXPECT_EQ(inertia_bundle_total(ParabolicPoint(1, Weights({2, 1, 1, 0}))), Rational(0));
  for (long long e = 1; e <= 9; ++e) {
    std::vector<long long> n(e + 1, 0);
    n[0] = 4;
    EXPECT_EQ(inertia_bundle_total(ParabolicPoint(1, Weights(n))), Rational(4 * (e - 1), 2 * e));
  }
  EXPECT_EQ(inertia_bundle_total(ParabolicPoint(1, Weights({3, 0}))), Rational(0));
  EXPECT_THROW(inertia_bundle_total(ParabolicPoint(1, Weights({3, 0})), RootSums(2)), InvalidArgument);
}

TEST(EndEulerChar, Examples) {
  EXPECT_EQ(end_euler_char(one_point(2, 2, 0, 1, {2, 1, 0})), Rational(-5));
  for (long long g = 0; g <= 3; ++g) {
    EXPECT_EQ(end_euler_char(ParabolicBundle(OrbifoldCurve{g, {}}, 3, 1)), Rational((1 - g) * 9));
  }
  OrbifoldCurve two{2, {}};
  two.points.emplace_back(1, Weights({2, 1, 0}));
  two.points.emplace_back(1, Weights({2, 1, 0}));
  EXPECT_EQ(end_euler_char(ParabolicBundle(two, 2, 0)), Rational(-6));
}

TEST(EndEulerChar, HomDatumBundleRoute) {
  const auto b = one_point(2, 2, 0, 1, {2, 1, 0});
  const auto end = endomorphism_bundle(b);
  EXPECT_EQ(end.rank(), 4);
  EXPECT_EQ(end.degree(), -1);
  EXPECT_EQ(stacky_degree(end), Rational(0));
  EXPECT_EQ(euler_char(end).chi, Rational(-5));
}

TEST(RiemannRochProperties, RandomBundles) {
  std::mt19937_64 gen(2024);
  for (int k = 0; k < 300; ++k) {
    const OrbifoldCurve shape = draw_curve(gen);
    const long long r = 1 + static_cast<long long>(gen() % 6);
    const ParabolicBundle b = draw_bundle(gen, r, shape);
    const ChiReport rep = euler_char(b);

    // chi commutes with q_*.
    ASSERT_EQ(rep.chi, Rational(b.degree() + (1 - b.genus()) * r));

    Rational corr_total(0);
    for (const auto& p : b.points()) corr_total += Rational(p.f) * correction_term(p);
    ASSERT_EQ(rep.chi, rep.stacky_degree + Rational((1 - b.genus()) * r) - corr_total);

    // Todd integral plus inertia.
    Rational assembled = global_term(rep.stacky_degree, r, b.genus(), point_shapes(b));
    for (const auto& p : b.points()) assembled += Rational(p.f) * inertia_bundle_total(p);
    ASSERT_EQ(assembled, rep.chi);

    // chi(End) two ways.
    const ParabolicBundle end = endomorphism_bundle(b);
    ASSERT_EQ(stacky_degree(end), Rational(0));
    ASSERT_EQ(euler_char(end).chi, end_euler_char(b));

    // Additivity over direct sums on the same curve.
    const ParabolicBundle other = draw_bundle(gen, 1 + static_cast<long long>(gen() % 4), shape);
    ASSERT_EQ(euler_char(direct_sum(b, other)).chi, rep.chi + euler_char(other).chi);
    ASSERT_EQ(stacky_degree(direct_sum(b, other)), rep.stacky_degree + stacky_degree(other));
  }
}
