#include <gtest/gtest.h>

#include "ffp/ffp.hpp"

using namespace ffp;

namespace {
Sequence seq(std::initializer_list<const char*> xs) {
  Sequence out;
  for (const char* x : xs) out.push_back(parse_rational(x));
  return out;
}
}  // namespace

TEST(Rationals, ParseAndPrint) {
  EXPECT_EQ(parse_rational("-6/4").get_str(), "-3/2");
  EXPECT_EQ(parse_rational("7").get_str(), "7");
  EXPECT_EQ(ratio(4, -6).get_str(), "-2/3");
  EXPECT_THROW(parse_rational("1/0"), parse_error);
  EXPECT_THROW(parse_rational("0.5"), parse_error);
  EXPECT_THROW(parse_rational(""), parse_error);
}

TEST(FFPoly, FromRoots) {
  EXPECT_EQ(from_roots(seq({"0", "0", "0"})).coefficients(), seq({"1", "0", "0", "0"}));
  EXPECT_EQ(from_roots(seq({"1", "1"})).coefficients(), seq({"1", "2", "1"}));
  EXPECT_EQ(from_roots(seq({"1", "2", "3"})).coefficients(), seq({"1", "6", "11", "6"}));
  EXPECT_EQ(from_roots(seq({"1", "2", "3"})).to_string(), "x^3 - 6x^2 + 11x - 6");
}

TEST(FFPoly, RejectsNonMonicAndEmpty) {
  EXPECT_THROW(MonicPoly::from_coefficients(seq({"2", "1"})), domain_error);
  EXPECT_THROW(MonicPoly::from_coefficients(seq({"1"})), domain_error);
}

TEST(FFPoly, MomentsAndCumulantsOfPowerPolynomial) {
  const Rational a = ratio(-3, 2);
  for (int d = 1; d <= 6; ++d) {
    const MonicPoly p = power_family(d, a);
    const auto m = moments(p, d + 2);
    for (int n = 1; n <= d + 2; ++n) EXPECT_EQ(m[n], power(a, n));
    const auto k = cumulants(p);
    EXPECT_EQ(k[1], a);
    for (int n = 2; n <= d; ++n) EXPECT_EQ(k[n], 0);
  }
}

TEST(FFPoly, MomentsByDirectPowerSums) {
  const Sequence roots = seq({"1/2", "-2", "3", "0", "5/3"});
  const auto m = moments(from_roots(roots), 7);
  for (int n = 1; n <= 7; ++n) {
    Rational s = 0;
    for (const auto& r : roots) s += power(r, n);
    EXPECT_EQ(m[n], s / 5);
  }
}

TEST(FFPoly, FamilyCumulants) {
  for (int d = 2; d <= 8; ++d) {
    const auto kh = cumulants(hermite(d));
    const auto kl = cumulants(laguerre(d, ratio(2, 5)));
    for (int n = 1; n <= d; ++n) {
      EXPECT_EQ(kh[n], n == 2 ? 1 : 0) << d << " " << n;
      EXPECT_EQ(kl[n], ratio(2, 5));
    }
  }
}

TEST(FFPoly, PolyFromCumulants) {
  EXPECT_EQ(poly_from_cumulants(5, seq({"2", "0", "0", "0", "0"})), power_family(5, 2));
  EXPECT_EQ(poly_from_cumulants(4, seq({"0", "1", "0", "0"})).coefficients(), seq({"1", "0", "-3/2", "0", "3/16"}));
  const MonicPoly l = poly_from_cumulants(4, seq({"1", "1", "1", "1"}));
  for (int k = 0; k <= 4; ++k) {
    const Rational ff = falling_factorial(4, static_cast<unsigned long>(k));
    EXPECT_EQ(l.a(k), ff * ff / (power(4, k) * Rational(factorial(static_cast<unsigned long>(k)))));
  }
  RandomRationals rng(11);
  for (int d = 1; d <= 7; ++d) {
    const MonicPoly p = rng.monic(d);
    EXPECT_EQ(poly_from_cumulants(d, cumulants(p)), p);
  }
}

TEST(FFPoly, Boxplus) {
  RandomRationals rng(3);
  for (int d = 1; d <= 6; ++d) {
    const MonicPoly p = rng.monic(d), q = rng.monic(d);
    EXPECT_EQ(boxplus(p, power_family(d, 0)), p);
    const auto kp = cumulants(p), kq = cumulants(q), ks = cumulants(boxplus(p, q));
    for (int n = 1; n <= d; ++n) EXPECT_EQ(ks[n], kp[n] + kq[n]);
  }
  EXPECT_EQ(boxplus(power_family(4, 1), power_family(4, 2)), power_family(4, 3));
  EXPECT_THROW(boxplus(power_family(3, 1), power_family(4, 1)), dimension_error);
}

TEST(FFPoly, Boxtimes) {
  RandomRationals rng(5);
  for (int d = 1; d <= 6; ++d) {
    const MonicPoly p = rng.monic(d);
    EXPECT_EQ(boxtimes(p, power_family(d, 1)), p);
    EXPECT_EQ(boxtimes(p, power_family(d, 0)), power_family(d, 0));
  }
  const MonicPoly r = boxtimes(from_roots(seq({"1", "2"})), from_roots(seq({"1", "3"})));
  EXPECT_EQ(r.to_string(), "x^2 - 6x + 6");
}

TEST(FFPoly, DerivativeShift) {
  const MonicPoly p = from_roots(seq({"1", "2", "3"}));
  EXPECT_EQ(derivative_shift(p, 0), p);
  EXPECT_EQ(derivative_shift(p, 3), power_family(3, 0));
  const MonicPoly dp = derivative_shift(p, 1);
  EXPECT_EQ(dp.monomial_coefficients(), seq({"1", "-4", "11/3", "0"}));
  // Same polynomial by multiplicative convolution with x(x-1)^2.
  EXPECT_EQ(boxtimes(p, from_roots(seq({"0", "1", "1"}))), dp);
  EXPECT_THROW(derivative_shift(p, 4), domain_error);
}

TEST(FFPoly, JsonRoundTrip) {
  const MonicPoly p = from_roots(seq({"1/2", "-1"}));
  const auto j = to_json(p);
  EXPECT_EQ(j["d"], 2);
  EXPECT_EQ(poly_from_json(nlohmann::json::parse(j.dump())), p);
  EXPECT_EQ(poly_from_json(nlohmann::json::parse(R"({"roots": ["1/2", -1]})")), p);
  EXPECT_THROW(poly_from_json(nlohmann::json::parse(R"({"roots": [1], "a": ["1","1"]})")), parse_error);
  EXPECT_THROW(poly_from_json(nlohmann::json::parse(R"({"a": ["1", "1/0"]})")), parse_error);
}

TEST(Families, Hermite) {
  EXPECT_EQ(hermite(2).to_string(), "x^2 - 1/2");
  EXPECT_EQ(hermite(4).coefficients(), seq({"1", "0", "-3/2", "0", "3/16"}));
  for (int d = 1; d <= 8; ++d) EXPECT_EQ(hermite_from_classical(d), hermite(d)) << d;
}

TEST(Families, Laguerre) {
  EXPECT_EQ(laguerre(4, ratio(1, 3)).coefficients(), seq({"1", "4/3", "1/6", "-1/54", "5/2592"}));
  EXPECT_EQ(laguerre(4, ratio(1, 3)).to_string(), "x^4 - (4/3)x^3 + (1/6)x^2 + (1/54)x + 5/2592");
  EXPECT_EQ(laguerre(1, 1).to_string(), "x - 1");
  EXPECT_EQ(compound_poisson_witness(2).to_string(), "x^2 - 2x + 1/2");
  EXPECT_EQ(compound_poisson_witness(1).to_string(), "x - 1");
}

TEST(Families, Power) {
  EXPECT_EQ(power_family(3, 0), MonicPoly::from_monomial(seq({"1", "0", "0", "0"})));
  EXPECT_EQ(power_family(3, 1).coefficients(), seq({"1", "3", "3", "1"}));
}

TEST(Families, Selectors) {
  EXPECT_EQ(FamilySpec::parse("laguerre", 0, ratio(1, 3)).build(4), laguerre(4, ratio(1, 3)));
  EXPECT_EQ(FamilySpec::parse("power", 2, 1).build(3), power_family(3, 2));
  EXPECT_THROW(FamilySpec::parse("legendre", 0, 1), parse_error);
  EXPECT_THROW(FamilySpec::laguerre(0), domain_error);
}

TEST(OneOverD, Formatting) {
  EXPECT_EQ(OneOverDPoly({5, -22, 32, -15}).to_string(), "5 - 22/d + 32/d^2 - 15/d^3");
  EXPECT_EQ(OneOverDPoly({0}).to_string(), "0");
  EXPECT_EQ(OneOverDPoly({ratio(1, 2), ratio(-3, 4)}).to_string(), "1/2 - (3/4)/d");
  EXPECT_EQ(OneOverDPoly({1, -5, 3}).evaluate(4), ratio(-1, 16));
}
