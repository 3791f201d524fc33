#include <gtest/gtest.h>

#include "ffp/ffp.hpp"

using namespace ffp;

namespace {

Sequence semicircle(int n) {
  Sequence k(static_cast<std::size_t>(n), Rational(0));
  if (n >= 2) k[1] = 1;
  return k;
}

Sequence constant(int n, const Rational& c) { return Sequence(static_cast<std::size_t>(n), c); }

PowerSeries ps(std::initializer_list<int> xs) {
  std::vector<Rational> c;
  for (int x : xs) c.emplace_back(x);
  return PowerSeries(c);
}

}  // namespace

TEST(Series, Arithmetic) {
  const PowerSeries a = ps({1, 1, 0, 0, 0});  // 1 + x
  const PowerSeries inv = inverse(a);
  EXPECT_EQ(inv, ps({1, -1, 1, -1, 1}));
  EXPECT_EQ(a * inv, ps({1, 0, 0, 0, 0}));
  EXPECT_EQ(derivative(ps({3, 2, 5})), ps({2, 10}));
  EXPECT_EQ(integrate(ps({2, 10})), ps({0, 2, 5}));
  EXPECT_THROW(inverse(ps({0, 1})), domain_error);
}

TEST(Series, LogAndComposition) {
  const PowerSeries l = log(ps({1, 1, 0, 0, 0}));
  EXPECT_EQ(l[3], ratio(1, 3));
  EXPECT_EQ(l[4], ratio(-1, 4));
  const PowerSeries f = ps({0, 1, 1, 0, 0, 0});
  const PowerSeries g = revert(f);
  EXPECT_EQ(compose(f, g), ps({0, 1, 0, 0, 0, 0}));
  EXPECT_EQ(g[2], -1);
  EXPECT_EQ(g[3], 2);
  EXPECT_EQ(g[4], -5);
  EXPECT_THROW(log(ps({2, 1})), domain_error);
}

TEST(Series, TruncationIsExplicit) {
  const PowerSeries a = ps({1, 2, 3});
  EXPECT_THROW(a[3], truncation_error);
  EXPECT_THROW(a.truncated(5), truncation_error);
  const LaurentSeries l(-1, ps({1, 0, 1}));
  EXPECT_EQ(l.coefficient(-2), 0);
  EXPECT_EQ(l.coefficient(1), 1);
  EXPECT_THROW(l.coefficient(2), truncation_error);
}

TEST(FreeTransforms, MomentsFromCumulants) {
  const auto m = free_moments_from_cumulants(semicircle(6), 6);
  EXPECT_EQ(m, (Sequence{0, 1, 0, 2, 0, 5}));
  const Rational l = ratio(2, 3);
  const auto mp = free_moments_from_cumulants(constant(3, l), 3);
  EXPECT_EQ(mp[0], l);
  EXPECT_EQ(mp[1], l + l * l);
  EXPECT_EQ(mp[2], l + 3 * l * l + l * l * l);
  const auto md = free_moments_from_cumulants(Sequence{3, 0, 0, 0}, 4);
  EXPECT_EQ(md[3], 81);
}

TEST(FreeTransforms, BoxtimesIdentity) {
  const Sequence ka{1, 2, -1, ratio(1, 2), 3};
  EXPECT_EQ(free_boxtimes(ka, Sequence{1, 0, 0, 0, 0}, 5), ka);
}

TEST(FreeTransforms, LeadingOrderOfFiniteBoxtimes) {
  RandomRationals rng(13);
  for (int n = 1; n <= 6; ++n) {
    const Sequence ka = rng.sequence(n), kb = rng.sequence(n);
    const Rational free = free_boxtimes(ka, kb, n)[static_cast<std::size_t>(n - 1)];
    EXPECT_EQ(noncrossing_sum(n, ka, kb), free);
    EXPECT_EQ(genus_lhs(n, 0, ka, kb), free);
  }
}

TEST(CauchyTransforms, KAndR) {
  const LaurentSeries g = cauchy_from_moments(free_moments_from_cumulants(semicircle(10), 10));
  EXPECT_EQ(g.coefficient(1), 1);
  EXPECT_EQ(g.coefficient(5), 2);
  const LaurentSeries k = k_transform(g);
  EXPECT_EQ(k.coefficient(-1), 1);
  EXPECT_EQ(k.coefficient(1), 1);
  for (int e = 2; e <= 8; ++e) EXPECT_EQ(k.coefficient(e), 0);
  const Rational l = ratio(3, 2);
  const auto kp = k_transform(cauchy_from_moments(free_moments_from_cumulants(constant(9, l), 9)));
  for (int e = 0; e <= 8; ++e) EXPECT_EQ(kp.coefficient(e), l);
  const auto recovered = cumulants_from_k(kp, 9);
  EXPECT_EQ(recovered, constant(9, l));
}

TEST(CauchyTransforms, ZeroProfile) {
  const LaurentSeries g = cauchy_from_moments(Sequence(6, Rational(0)));
  EXPECT_EQ(g.coefficient(1), 1);
  for (int e = 2; e <= 7; ++e) EXPECT_EQ(g.coefficient(e), 0);
  EXPECT_EQ(k_transform(g).coefficient(0), 0);
}

TEST(Infinitesimal, HermiteAndLaguerreClosedForms) {
  const auto h = infinitesimal_paths(semicircle(8), 8);
  EXPECT_TRUE(h.agree);
  EXPECT_EQ(h.annular[1], -1);
  EXPECT_EQ(h.annular[3], -5);
  EXPECT_EQ(h.annular[5], -22);
  EXPECT_EQ(h.annular[7], -93);
  const auto l = infinitesimal_paths(constant(8, 1), 8);
  EXPECT_TRUE(l.agree);
  EXPECT_EQ(l.annular[0], 0);
  EXPECT_EQ(l.annular[1], -1);
  EXPECT_EQ(l.annular[2], -6);
  EXPECT_EQ(l.annular[3], -29);
  const Rational x = ratio(2, 5);
  const auto g = infinitesimal_paths(constant(4, x), 4);
  EXPECT_EQ(g.annular[3], -(6 * x + 17 * x * x + 6 * x * x * x));
}

TEST(Infinitesimal, DiracHasNoCorrection) {
  const auto p = infinitesimal_paths(Sequence{ratio(5, 2), 0, 0, 0, 0, 0}, 6);
  EXPECT_TRUE(p.agree);
  for (const auto& x : p.annular) EXPECT_EQ(x, 0);
  for (const auto& x : p.cumulants) EXPECT_EQ(x, 0);
}

TEST(Infinitesimal, CumulantsOfSemicircleAndFreePoisson) {
  const auto s = infinitesimal_paths(semicircle(8), 8);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(s.cumulants[static_cast<std::size_t>(n - 1)], n % 2 == 0 ? -1 : 0) << n;
  const Rational l = 2;
  const auto p = infinitesimal_paths(constant(8, l), 8);
  for (int n = 1; n <= 8; ++n) {
    Rational expected = 0;
    for (int j = 1; 2 * j <= n; ++j) expected -= Rational(binomial(n, 2 * j)) * power(l, j);
    EXPECT_EQ(p.cumulants[static_cast<std::size_t>(n - 1)], expected) << n;
  }
}

TEST(Infinitesimal, AlphaAnnular) {
  EXPECT_EQ(alpha_annular(semicircle(2), 1, 1), 1);
  EXPECT_EQ(alpha_annular(Sequence{3, 0, 0, 0}, 2, 2), 0);
}

TEST(Markov, DiracAndSemicircle) {
  const LaurentSeries g = cauchy_from_moments(Sequence{2, 4, 8, 16, 32});
  const LaurentSeries mg = markov_transform(g);
  for (int e = 1; e <= 5; ++e) EXPECT_EQ(mg.coefficient(e), g.coefficient(e));
  const LaurentSeries arc = markov_transform(cauchy_from_moments(free_moments_from_cumulants(semicircle(8), 8)));
  EXPECT_EQ(arc.coefficient(3), 2);
  EXPECT_EQ(arc.coefficient(5), 6);
  EXPECT_EQ(arc.coefficient(7), 20);
  EXPECT_TRUE(markov_identity_check(free_moments_from_cumulants(semicircle(10), 10), 9).passed);
}

TEST(SecondOrder, FunctionalEquation) {
  EXPECT_TRUE(second_order_functional_check(semicircle(8), 6).passed);
  EXPECT_TRUE(second_order_functional_check(constant(8, 1), 6).passed);
  EXPECT_TRUE(second_order_functional_check(Sequence(8, Rational(0)), 6).passed);
}

TEST(Fractional, PowerIdentity) {
  EXPECT_TRUE(fractional_identity_check(semicircle(6), ratio(1, 2), 6).passed);
  EXPECT_TRUE(fractional_identity_check(constant(6, 1), ratio(1, 3), 6).passed);
  EXPECT_TRUE(fractional_identity_check(Sequence{ratio(3, 2), 0, 0, 0, 0, 0}, ratio(2, 5), 6).passed);
}

TEST(Trends, DerivativeFlowAndBoxtimes) {
  const auto flow = derivative_flow_trend(FamilySpec::hermite(), ratio(1, 2), 2, {8, 16, 32});
  ASSERT_EQ(flow.rows.size(), 3u);
  EXPECT_GT(flow.rows[0].gap, flow.rows[1].gap);
  EXPECT_NEAR(*flow.rows[2].ratio, 2.0, 0.5);
  const auto mean = derivative_flow_trend(FamilySpec::power(ratio(7, 3)), ratio(1, 2), 1, {8, 16});
  for (const auto& row : mean.rows) EXPECT_EQ(row.gap, 0);
  const auto lag = derivative_flow_trend(FamilySpec::laguerre(1), ratio(1, 2), 3, {8, 16, 32});
  EXPECT_GT(lag.rows[0].gap, lag.rows[1].gap);
  EXPECT_GT(lag.rows[1].gap, lag.rows[2].gap);
  const auto bt = boxtimes_trend(FamilySpec::hermite(), FamilySpec::laguerre(1), 2, {8, 16, 32});
  EXPECT_NEAR(*bt.rows[2].ratio, 2.0, 0.5);
}
