#include <gtest/gtest.h>

#include "ffp/ffp.hpp"

using namespace ffp;

namespace {
const Permutation kFigureTorus = parse_permutation("(1,7,4)(2,5)(3,6)", 7);
const Permutation kFigureAnnulus = parse_permutation("(1,7,5,4)(3)(2,6)", 7);
}  // namespace

TEST(Permutations, ParseAndPrint) {
  EXPECT_EQ(kFigureTorus.to_string(), "(1,7,4)(2,5)(3,6)");
  EXPECT_EQ(parse_permutation("(1,3)", 4).to_string(), "(1,3)(2)(4)");
  EXPECT_THROW(parse_permutation("(1,2,1)"), std::exception);
  EXPECT_THROW(parse_permutation("(1,x)"), parse_error);
}

TEST(Permutations, Compose) {
  const Permutation b = parse_permutation("(1,2,3,4)");
  EXPECT_EQ(compose(Permutation::identity(4), b), b);
  EXPECT_EQ(compose(b, inverse(b)), Permutation::identity(4));
  EXPECT_EQ(compose(inverse(parse_permutation("(1,3)", 4)), b).to_string(), "(1,2)(3,4)");
}

TEST(Permutations, OrbitPartition) {
  EXPECT_EQ(orbit_partition(Permutation::identity(3)), SetPartition::finest(3));
  EXPECT_EQ(orbit_partition(parse_permutation("(1,2,3)")), SetPartition::coarsest(3));
  EXPECT_EQ(orbit_partition(kFigureTorus).to_string(), "{1,4,7}{2,5}{3,6}");
}

TEST(Permutations, CanonicalGamma) {
  EXPECT_EQ(canonical_gamma(CycleType({5})).to_string(), "(1,2,3,4,5)");
  EXPECT_EQ(canonical_gamma(CycleType({3, 1, 1})).to_string(), "(1,2,3)(4)(5)");
  EXPECT_EQ(canonical_gamma(CycleType({4, 3})).to_string(), "(1,2,3,4)(5,6,7)");
  EXPECT_EQ(gamma_rs(4, 3), canonical_gamma(CycleType({4, 3})));
}

TEST(Permutations, TransitivityAndGenus) {
  EXPECT_TRUE(is_transitive_pair(Permutation::identity(4), canonical_gamma(CycleType({4}))));
  EXPECT_FALSE(is_transitive_pair(Permutation::identity(4), canonical_gamma(CycleType({2, 2}))));
  const Permutation g43 = gamma_rs(4, 3);
  EXPECT_TRUE(is_transitive_pair(kFigureTorus, g43));
  EXPECT_EQ(relative_genus(kFigureTorus, g43), 1);
  EXPECT_EQ(relative_genus(kFigureAnnulus, g43), 0);
  const Permutation g5 = canonical_gamma(CycleType({5}));
  EXPECT_EQ(relative_genus(g5, g5), 0);
  EXPECT_THROW(relative_genus(Permutation::identity(4), canonical_gamma(CycleType({2, 2}))), domain_error);
}

TEST(Permutations, GenusZeroSingleCycleIsCatalan) {
  const Integer catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(Integer(enumerate_snc(CycleType({n}), 0).size()), catalan[n]) << n;
  }
  const auto two_points = enumerate_snc(CycleType({1, 1}), 0);
  ASSERT_EQ(two_points.size(), 1u);
  EXPECT_EQ(two_points[0].to_string(), "(1,2)");
}

TEST(Permutations, GenusZeroAnnularMatchesNoncrossingCycles) {
  // Genus-zero permutations relative to gamma_n lift NC(n) one to one.
  for (const auto& a : enumerate_snc(CycleType({5}), 0)) EXPECT_TRUE(is_noncrossing(orbit_partition(a)));
}

TEST(Permutations, AnnularEnumerationAgreesWithGenusSweep) {
  for (int n = 2; n <= 6; ++n) {
    for (int r = 1; r < n; ++r) {
      auto a = enumerate_annular(r, n - r);
      auto b = enumerate_snc(CycleType({std::max(r, n - r), std::min(r, n - r)}), 0);
      if (r >= n - r) {
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        EXPECT_EQ(a, b) << r << "," << n - r;
      } else {
        EXPECT_EQ(a.size(), b.size());
      }
    }
  }
  const auto s43 = enumerate_annular(4, 3);
  EXPECT_NE(std::find(s43.begin(), s43.end(), kFigureAnnulus), s43.end());
  EXPECT_EQ(std::find(s43.begin(), s43.end(), kFigureTorus), s43.end());
}

TEST(Permutations, AnnularKreweras) {
  EXPECT_EQ(annular_kreweras(parse_permutation("(1,2)"), 1, 1).to_string(), "(1,2)");
  const Permutation kr = annular_kreweras(kFigureAnnulus, 4, 3);
  EXPECT_EQ(kr.cycle_count(), 4);
  EXPECT_EQ(kr, compose(inverse(kFigureAnnulus), gamma_rs(4, 3)));
  EXPECT_EQ(annular_kreweras(parse_permutation("(1,2,3)"), 2, 1).to_string(), "(1)(2,3)");
  EXPECT_THROW(annular_kreweras(kFigureTorus, 4, 3), domain_error);
}

TEST(Permutations, TypeCount) {
  EXPECT_EQ(type_count(CycleType({5})), 24);
  EXPECT_EQ(type_count(CycleType({1, 1, 1, 1})), 1);
  EXPECT_EQ(type_count(CycleType({2, 2})), 3);
  for (int n = 1; n <= 6; ++n) {
    Integer total = 0;
    for (const auto& z : cycle_types(n)) total += type_count(z);
    EXPECT_EQ(total, factorial(static_cast<unsigned long>(n)));
  }
}
