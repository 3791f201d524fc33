#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "ffp/config.hpp"
#include "ffp/families.hpp"
#include "ffp/ffpoly.hpp"
#include "ffp/identities.hpp"
#include "ffp/pair_sums.hpp"
#include "ffp/permutations.hpp"
#include "ffp/rational.hpp"
#include "ffp/series.hpp"

namespace ffp {

// m_n = sum over NC(n) of kappa_pi, n = 1..N.
inline Sequence free_moments_from_cumulants(const Sequence& k, int order, const Limits& limits = default_limits()) {
  detail::require_length(k, order, "free cumulants");
  Sequence m;
  for (int n = 1; n <= order; ++n) {
    const TypePairTable& table = noncrossing_type_table(n, limits);
    Rational sum = 0;
    for (std::size_t i = 0; i < table.types.size(); ++i) {
      std::uint64_t c = 0;
      for (std::uint64_t v : table.counts[i]) c += v;
      if (c != 0) sum += Rational(Integer(static_cast<unsigned long>(c))) * type_weight(k, table.types[i]);
    }
    m.push_back(sum);
  }
  return m;
}

// kappa_n(mu boxtimes nu) = sum over NC(n) of kappa_pi(mu) kappa_{Kr(pi)}(nu).
inline Sequence free_boxtimes(const Sequence& ka, const Sequence& kb, int order, const Limits& limits = default_limits()) {
  detail::require_length(ka, order, "free cumulants of the first factor");
  detail::require_length(kb, order, "free cumulants of the second factor");
  Sequence out;
  for (int n = 1; n <= order; ++n) {
    const TypePairTable& table = noncrossing_type_table(n, limits);
    Rational sum = 0;
    for (std::size_t i = 0; i < table.types.size(); ++i) {
      const Rational wa = type_weight(ka, table.types[i]);
      if (wa == 0) continue;
      for (std::size_t j = 0; j < table.types.size(); ++j) {
        if (table.counts[i][j] == 0) continue;
        sum += Rational(Integer(static_cast<unsigned long>(table.counts[i][j]))) * wa * type_weight(kb, table.types[j]);
      }
    }
    out.push_back(sum);
  }
  return out;
}

// G = sum_{n >= 0} m_n w^{n+1} with m_0 = 1, known through w^{N+1}.
inline LaurentSeries cauchy_from_moments(const Sequence& m) {
  std::vector<Rational> body{Rational(1)};
  body.insert(body.end(), m.begin(), m.end());
  return LaurentSeries(1, PowerSeries(std::move(body)));
}

// Reads m_1..m_N back from the coefficients of w^2..w^{N+1}.
inline Sequence moments_from_cauchy(const LaurentSeries& g, int order) {
  Sequence m;
  for (int n = 1; n <= order; ++n) m.push_back(g.coefficient(n + 1));
  return m;
}

inline void require_cauchy(const LaurentSeries& g, const char* op) {
  if (g.coefficient(0) != 0 || leading_exponent(g) != 1 || g.coefficient(1) != 1 || g.valuation() < 0) {
    throw domain_error(std::string(op) + ": input must be a Cauchy-type series w + O(w^2)");
  }
}

// The power series h(z) = 1/K(z): the compositional inverse of g(w) = G at w.
inline PowerSeries k_inverse(const LaurentSeries& g) {
  require_cauchy(g, "k_transform");
  return revert(g.as_power_series());
}

// K(z) = 1/z + kappa_1 + kappa_2 z + ... as a Laurent series in z, from G(K(z)) = z.
inline LaurentSeries k_transform(const LaurentSeries& g) {
  const PowerSeries h = k_inverse(g);
  return inverse(LaurentSeries(0, h));
}

// kappa_n is the coefficient of z^{n-1} in K (and in R = K - 1/z).
inline Sequence cumulants_from_k(const LaurentSeries& k, int order) {
  Sequence out;
  for (int n = 1; n <= order; ++n) out.push_back(k.coefficient(n - 1));
  return out;
}

inline LaurentSeries r_transform(const LaurentSeries& k) {
  return k - monomial(-1, 1, k.precision());
}

// alpha_{r,s} = sum over S_NC(r, s) of kappa_alpha.
inline Rational alpha_annular(const Sequence& k, int r, int s, const Limits& limits = default_limits()) {
  detail::require_length(k, r + s, "free cumulants");
  const Sequence ones(static_cast<std::size_t>(r + s), Rational(1));
  return annular_pair_sum(r, s, k, ones, limits);
}

// m'_n = -(n/2) sum over r + s = n of alpha_{r,s}/(rs), n = 1..N.
inline Sequence infinitesimal_from_annular(const Sequence& k, int order, const Limits& limits = default_limits()) {
  Sequence out;
  for (int n = 1; n <= order; ++n) {
    Rational sum = 0;
    for (int r = 1; r < n; ++r) sum += alpha_annular(k, r, n - r, limits) / Rational(r * (n - r));
    out.push_back(-ratio(n, 2) * sum);
  }
  return out;
}

// G_inf = G''/(2G') - G'/G with derivatives in z.
inline LaurentSeries g_inf_from_cauchy(const LaurentSeries& g) {
  require_cauchy(g, "g_inf_from_cauchy");
  const LaurentSeries g1 = derivative_in_z(g);
  const LaurentSeries g2 = derivative_in_z(g1);
  return ratio(1, 2) * (g2 / g1) - g1 / g;
}

// m'_n is the coefficient of w^{n+1} in G_inf.
inline Sequence infinitesimal_moments(const LaurentSeries& g_inf, int order) { return moments_from_cauchy(g_inf, order); }

// R_inf = K''/(2K') + 1/z.
inline LaurentSeries r_inf_from_k(const LaurentSeries& k) {
  const LaurentSeries k1 = derivative(k);
  const LaurentSeries k2 = derivative(k1);
  const LaurentSeries half_ratio = ratio(1, 2) * (k2 / k1);
  return half_ratio + monomial(-1, 1, half_ratio.precision());
}

// kappa'_n is the coefficient of z^{n-1} in R_inf.
inline Sequence infinitesimal_cumulants(const LaurentSeries& r_inf, int order) { return cumulants_from_k(r_inf, order); }

// -K'(z) G_inf(K(z)); G_inf(K(z)) is G_inf as a w-series evaluated at w = 1/K(z) = h(z).
inline LaurentSeries r_inf_via_g_inf(const LaurentSeries& g, const LaurentSeries& g_inf) {
  const PowerSeries h = k_inverse(g);
  const LaurentSeries k = inverse(LaurentSeries(0, h));
  const PowerSeries outer = g_inf.as_power_series();
  const LaurentSeries composed(0, compose(outer, h.truncated(std::min(h.order(), outer.order()))));
  return Rational(-1) * (derivative(k) * composed);
}

// G_{M(mu)} = -G'/G.
inline LaurentSeries markov_transform(const LaurentSeries& g) {
  require_cauchy(g, "markov_transform");
  return Rational(-1) * (derivative_in_z(g) / g);
}

struct SeriesComparison {
  bool passed = true;
  std::string first_failure;  // empty when passed
};

// mu' = (M(mu) - M(M(mu)))/2 coefficientwise against G_inf, through w^{N+1}.
inline SeriesComparison markov_identity_check(const Sequence& m, int order) {
  const LaurentSeries g = cauchy_from_moments(m);
  const LaurentSeries gm = markov_transform(g);
  const LaurentSeries gmm = markov_transform(gm);
  const LaurentSeries rhs = ratio(1, 2) * (gm - gmm);
  const LaurentSeries lhs = g_inf_from_cauchy(g);
  SeriesComparison out;
  for (int e = 0; e <= order + 1; ++e) {
    if (lhs.coefficient(e) != rhs.coefficient(e)) {
      out.passed = false;
      out.first_failure = "w^" + std::to_string(e) + ": G_inf=" + lhs.coefficient(e).get_str() +
                          " vs (M - MM)/2=" + rhs.coefficient(e).get_str();
      break;
    }
  }
  return out;
}

struct SecondOrderResult {
  bool passed = true;
  int total_order = 0;
  std::vector<std::vector<Rational>> alpha;      // alpha[r][s] from annular sums
  std::vector<std::vector<Rational>> from_log;   // rs [x^r y^s] log of the difference quotient
  std::string first_failure;
};

// Second-order Cauchy functional equation as truncated bivariate series in x = 1/z, y = 1/w.
// (G(w) - G(z))/(z - w) = xy sum_n m_n h_n(x, y), with h_n the complete
// homogeneous polynomial; d^2/dzdw kills log(xy) and maps c x^r y^s to
// rs c x^{r+1} y^{s+1}, which is matched against alpha_{r,s} x^{r+1} y^{s+1}.
inline SecondOrderResult second_order_functional_check(const Sequence& k, int total_order,
                                                       const Limits& limits = default_limits()) {
  if (total_order < 2) throw domain_error("second-order check needs total order >= 2");
  check_cap(total_order, limits.annular, "annular size r+s");
  const Sequence m = free_moments_from_cumulants(k, total_order, limits);
  BivariateSeries quotient(total_order);
  for (int n = 0; n <= total_order; ++n) {
    const Rational mn = n == 0 ? Rational(1) : m[static_cast<std::size_t>(n - 1)];
    for (int i = 0; i <= n; ++i) quotient.at(i, n - i) += mn;
  }
  const BivariateSeries logq = log(quotient);
  SecondOrderResult out;
  out.total_order = total_order;
  out.alpha.assign(static_cast<std::size_t>(total_order + 1), std::vector<Rational>(static_cast<std::size_t>(total_order + 1), Rational(0)));
  out.from_log = out.alpha;
  for (int r = 1; r < total_order; ++r) {
    for (int s = 1; r + s <= total_order; ++s) {
      out.alpha[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] = alpha_annular(k, r, s, limits);
      out.from_log[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] = Rational(r * s) * logq(r, s);
      if (out.passed && out.alpha[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] !=
                            out.from_log[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)]) {
        out.passed = false;
        out.first_failure = "alpha_{" + std::to_string(r) + "," + std::to_string(s) + "}: annular=" +
                            out.alpha[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)].get_str() +
                            " vs series=" + out.from_log[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)].get_str();
      }
    }
  }
  return out;
}

struct FractionalResult {
  bool passed = true;
  Sequence lhs, rhs;
  int first_failure = 0;
};

// (1-t) delta_0 + t mu^{boxplus 1/t} against Lambda_{1/t}(mu) boxtimes ((1-t) delta_0 + t delta_1).
// Left: t times the free moments of kappa/t. Right: cumulants kappa_n / t^n of
// the dilation, free cumulants of the Bernoulli factor from its K-transform,
// free multiplicative convolution, then free moments.
inline FractionalResult fractional_identity_check(const Sequence& k, const Rational& t, int order,
                                                  const Limits& limits = default_limits()) {
  if (t <= 0 || t >= 1) throw domain_error("fractional identity needs 0 < t < 1");
  detail::require_length(k, order, "free cumulants");
  Sequence scaled, dilated;
  for (int n = 1; n <= order; ++n) {
    scaled.push_back(k[static_cast<std::size_t>(n - 1)] / t);
    dilated.push_back(k[static_cast<std::size_t>(n - 1)] / power(t, n));
  }
  FractionalResult out;
  for (const auto& v : free_moments_from_cumulants(scaled, order, limits)) out.lhs.push_back(t * v);
  const Sequence bernoulli_moments(static_cast<std::size_t>(order), t);
  const Sequence bernoulli_cumulants = cumulants_from_k(k_transform(cauchy_from_moments(bernoulli_moments)), order);
  out.rhs = free_moments_from_cumulants(free_boxtimes(dilated, bernoulli_cumulants, order, limits), order, limits);
  for (int n = 1; n <= order; ++n) {
    if (out.lhs[static_cast<std::size_t>(n - 1)] != out.rhs[static_cast<std::size_t>(n - 1)]) {
      out.passed = false;
      out.first_failure = n;
      break;
    }
  }
  return out;
}

// One row of a finite-d convergence table.
struct TrendRow {
  int d = 0;
  Rational finite;
  Rational limit;
  Rational gap;                  // |finite - limit|
  std::optional<double> ratio;   // gap(previous d) / gap(d), when both are nonzero
};

struct TrendReport {
  int n = 0;
  std::vector<TrendRow> rows;
  bool exact = false;  // every gap is zero
};

inline void fill_ratios(TrendReport& report) {
  report.exact = true;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    if (report.rows[i].gap != 0) report.exact = false;
    if (i == 0) continue;
    const Rational& prev = report.rows[i - 1].gap;
    const Rational& cur = report.rows[i].gap;
    if (prev != 0 && cur != 0) report.rows[i].ratio = Rational(prev / cur).get_d();
  }
}

// r_d = D^k p_d(t x) with k = floor((1-t) d). Its moments come from
// x^k D^k p_d(tx)/(d)_k = derivative_shift(dilate(p_d, 1/t), k), whose extra
// k zero roots scale m_n by (d-k)/d. The target is mu^{boxplus 1/t}, with free
// cumulants kappa/t taken from the family's limit profile.
inline TrendReport derivative_flow_trend(const FamilySpec& family, const Rational& t, int n, const std::vector<int>& ds,
                                         const Limits& limits = default_limits()) {
  if (t <= 0 || t >= 1) throw domain_error("derivative flow needs 0 < t < 1");
  Sequence target_k = family.cumulant_profile(n);
  for (auto& v : target_k) v /= t;
  const Rational target = free_moments_from_cumulants(target_k, n, limits)[static_cast<std::size_t>(n - 1)];
  TrendReport report;
  report.n = n;
  for (int d : ds) {
    Rational kq = (Rational(1) - t) * d;
    const int k = static_cast<int>(mpz_class(kq.get_num() / kq.get_den()).get_si());
    if (k < 0 || k >= d) throw domain_error("derivative flow needs 0 <= floor((1-t)d) < d");
    const MonicPoly shifted = derivative_shift(dilate(family.build(d), Rational(1) / t), k);
    const Rational m = moments(shifted, n)[n] * ratio(d, d - k);
    report.rows.push_back({d, m, target, abs(m - target), std::nullopt});
  }
  fill_ratios(report);
  return report;
}

// m_n(p_d boxtimes_d q_d) against the free limit with the families' limit cumulants.
inline TrendReport boxtimes_trend(const FamilySpec& p, const FamilySpec& q, int n, const std::vector<int>& ds,
                                  const Limits& limits = default_limits()) {
  const Sequence limit_k = free_boxtimes(p.cumulant_profile(n), q.cumulant_profile(n), n, limits);
  const Rational target = free_moments_from_cumulants(limit_k, n, limits)[static_cast<std::size_t>(n - 1)];
  TrendReport report;
  report.n = n;
  for (int d : ds) {
    if (d < n) throw domain_error("trend degrees must be at least the moment order");
    const Rational m = moments(boxtimes(p.build(d), q.build(d)), n)[n];
    report.rows.push_back({d, m, target, abs(m - target), std::nullopt});
  }
  fill_ratios(report);
  return report;
}

// The three routes to m'_1..m'_N: annular sums, G_inf series, and the (1/d)^1
// coefficient of the exact expansion of m_n.
struct InfinitesimalPaths {
  Sequence annular;
  Sequence series;
  Sequence expansion;
  Sequence cumulants;  // kappa'_1..kappa'_N from R_inf
  bool agree = true;
};

inline InfinitesimalPaths infinitesimal_paths(const Sequence& k, int order, const Limits& limits = default_limits()) {
  InfinitesimalPaths out;
  out.annular = infinitesimal_from_annular(k, order, limits);
  const LaurentSeries g = cauchy_from_moments(free_moments_from_cumulants(k, order, limits));
  out.series = infinitesimal_moments(g_inf_from_cauchy(g), order);
  for (int n = 1; n <= order; ++n) out.expansion.push_back(order_d_expansion(n, k, limits).coefficient(1));
  out.cumulants = infinitesimal_cumulants(r_inf_from_k(k_transform(g)), order);
  out.agree = out.annular == out.series && out.series == out.expansion;
  return out;
}

}  // namespace ffp
