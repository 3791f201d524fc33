#include <gtest/gtest.h>

#include "ffp/ffp.hpp"

using namespace ffp;

namespace {

Sequence ones(int n) { return Sequence(static_cast<std::size_t>(n), Rational(1)); }

Sequence hermite_profile(int n) {
  Sequence k(static_cast<std::size_t>(n), Rational(0));
  if (n >= 2) k[1] = 1;
  return k;
}

// Brute-force pair sweep for the k-th layer: pairs joining to 1_n with
// |sigma| + |tau| = n + 1 - k, weighted by mu(0,sigma) mu(0,tau) u_sigma v_tau.
Rational brute_layer(int n, int k, const Sequence& u, const Sequence& v) {
  const auto parts = enumerate_partitions(n);
  Rational total = 0;
  for (const auto& s : parts) {
    for (const auto& t : parts) {
      if (s.block_count() + t.block_count() != n + 1 - k) continue;
      if (join(s, t) != SetPartition::coarsest(n)) continue;
      total += Rational(mobius_zero(s) * mobius_zero(t)) * type_weight(u, partition_type(s)) * type_weight(v, partition_type(t));
    }
  }
  return total;
}

}  // namespace

TEST(Identities, SingleBlockCases) {
  const Sequence kp{ratio(3, 2)}, kq{ratio(-2, 3)};
  EXPECT_EQ(product_cumulant_rhs(1, 5, kp, kq), kp[0] * kq[0]);
  EXPECT_EQ(product_moment_rhs(1, 5, kp, kq), kp[0] * kq[0]);
}

TEST(Identities, ProductFormulasMatchDirectConvolution) {
  RandomRationals rng(17);
  for (int d = 2; d <= 6; ++d) {
    for (int rep = 0; rep < 5; ++rep) {
      const MonicPoly p = rng.monic(d), q = rng.monic(d);
      const auto kp = cumulants(p), kq = cumulants(q), kr = cumulants(boxtimes(p, q));
      const auto mq = moments(q, d), mr = moments(boxtimes(p, q), d);
      for (int n = 1; n <= d; ++n) {
        EXPECT_EQ(product_cumulant_rhs(n, d, kp.k, kq.k), kr[n]) << d << " " << n;
        EXPECT_EQ(product_moment_rhs(n, d, kp.k, mq.m), mr[n]) << d << " " << n;
      }
    }
  }
}

TEST(Identities, MomentCumulantEval) {
  const Sequence dirac{ratio(-5, 3), 0, 0, 0, 0};
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(moment_cumulant_eval(n, 7, dirac), power(ratio(-5, 3), n));
  EXPECT_EQ(moment_cumulant_eval(4, 4, hermite_profile(4)), moments(hermite(4), 4)[4]);
}

TEST(Identities, HermiteTableRows) {
  EXPECT_EQ(order_d_expansion(2, hermite_profile(2)).to_string(), "1 - 1/d");
  EXPECT_EQ(order_d_expansion(4, hermite_profile(4)).to_string(), "2 - 5/d + 3/d^2");
  EXPECT_EQ(order_d_expansion(6, hermite_profile(6)).to_string(), "5 - 22/d + 32/d^2 - 15/d^3");
  const OneOverDPoly e = order_d_expansion(6, hermite_profile(6));
  for (int d = 6; d <= 9; ++d) EXPECT_EQ(e.evaluate(d), moments(hermite(d), 6)[6]);
}

TEST(Identities, ExpansionOfConstantProfiles) {
  const Rational lambda = ratio(3, 7);
  EXPECT_EQ(order_d_expansion(2, Sequence(2, lambda)).coefficient(1), -lambda);
  const OneOverDPoly dirac = order_d_expansion(5, Sequence{2, 0, 0, 0, 0});
  EXPECT_EQ(dirac.degree(), 0);
  EXPECT_EQ(dirac.coefficient(0), 32);
}

TEST(Identities, JoinTableMatchesBruteForce) {
  RandomRationals rng(23);
  for (int n = 1; n <= 5; ++n) {
    const Sequence u = rng.sequence(n), v = rng.sequence(n);
    const auto layers = join_pair_layers(n, u, v);
    for (int k = 0; k < n; ++k) EXPECT_EQ(layers[static_cast<std::size_t>(k)], brute_layer(n, k, u, v)) << n << " " << k;
  }
}

TEST(Identities, GenusDecomposition) {
  RandomRationals rng(29);
  for (int n = 1; n <= 5; ++n) {
    const Sequence u = rng.sequence(n), v = rng.sequence(n);
    for (int k = 0; k < n; ++k) EXPECT_EQ(genus_lhs(n, k, u, v), genus_rhs(n, k, u, v)) << n << " " << k;
  }
  EXPECT_THROW(genus_layer(4, 2, 2, ones(4), ones(4)), domain_error);
  EXPECT_THROW(genus_layer(4, 4, 0, ones(4), ones(4)), domain_error);
}

TEST(Identities, GenusZeroLayerIsNoncrossingSum) {
  RandomRationals rng(31);
  for (int n = 1; n <= 6; ++n) {
    const Sequence u = rng.sequence(n), v = rng.sequence(n);
    EXPECT_EQ(genus_layer(n, 0, 0, u, v).value, noncrossing_sum(n, u, v));
    EXPECT_EQ(genus_lhs(n, 0, u, v), noncrossing_sum(n, u, v));
  }
}

TEST(Identities, FirstLayerIsAnnularSum) {
  RandomRationals rng(37);
  for (int n = 2; n <= 6; ++n) {
    const Sequence u = rng.sequence(n), v = rng.sequence(n);
    EXPECT_EQ(genus_lhs(n, 1, u, v), annular_sum(n, u, v)) << n;
  }
  EXPECT_EQ(genus_lhs(4, 1, ones(4), ones(4)), annular_sum(4, ones(4), ones(4)));
}

TEST(Identities, CompoundPoisson) {
  EXPECT_TRUE(compound_poisson_check(power_family(5, 1)).passed);
  EXPECT_TRUE(compound_poisson_check(power_family(5, 0)).passed);
  RandomRationals rng(41);
  for (int d = 1; d <= 6; ++d) EXPECT_TRUE(compound_poisson_check(rng.monic(d)).passed);
}

TEST(Identities, MobiusAlgebra) {
  for (int n = 1; n <= 4; ++n) {
    const std::size_t size = enumerate_partitions(n).size();
    std::vector<Rational> delta(size, Rational(0)), g(size);
    delta[0] = 1;
    RandomRationals rng(static_cast<std::uint64_t>(n));
    for (auto& x : g) x = rng.next();
    EXPECT_TRUE(mobius_algebra_check(n, delta, g).passed);
    std::vector<Rational> f(size);
    for (auto& x : f) x = rng.next();
    EXPECT_TRUE(mobius_algebra_check(n, f, g).passed);
  }
}

TEST(Identities, CountingFormulas) {
  const auto top = [](int n) { return partition_type(SetPartition::coarsest(n)); };
  const auto bottom = [](int n) { return partition_type(SetPartition::finest(n)); };
  EXPECT_EQ(count_A(top(5), bottom(5)), 1);
  EXPECT_EQ(count_B(top(5), bottom(5)), 1);
  // Only {1,3}{2}{4} and {2,4}{1}{3} have a complement with two pairs.
  EXPECT_EQ(count_A(PartitionType({2, 1, 0, 0}), PartitionType({0, 2, 0, 0})), 2);
  EXPECT_EQ(count_A_enumerated(PartitionType({2, 1, 0, 0}), PartitionType({0, 2, 0, 0})), 2);
  EXPECT_EQ(count_B(PartitionType({1, 1, 0}), PartitionType({1, 1, 0})), 6);
  EXPECT_EQ(count_B_enumerated(PartitionType({1, 1, 0}), PartitionType({1, 1, 0})), 6);
  EXPECT_THROW(count_A(PartitionType({2, 1, 0, 0}), PartitionType({2, 1, 0, 0})), domain_error);
  for (int n = 1; n <= 5; ++n) {
    for (const auto& [s, t] : admissible_type_pairs(n)) {
      EXPECT_EQ(count_A(s, t), count_A_enumerated(s, t));
      EXPECT_EQ(count_B(s, t), count_B_enumerated(s, t));
    }
  }
}

TEST(Identities, CapsAreEnforced) {
  Limits tight = default_limits();
  tight.pair_sweep = 4;
  EXPECT_THROW(order_d_expansion(5, hermite_profile(5), tight), size_limit_error);
  tight = default_limits();
  tight.genus_high_k = 4;
  EXPECT_THROW(genus_layer(5, 2, 0, ones(5), ones(5), tight), size_limit_error);
}
