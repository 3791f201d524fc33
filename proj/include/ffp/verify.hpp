#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ffp/asymptotics.hpp"
#include "ffp/config.hpp"
#include "ffp/families.hpp"
#include "ffp/ffpoly.hpp"
#include "ffp/identities.hpp"
#include "ffp/random.hpp"

namespace ffp {

using Json = nlohmann::ordered_json;

struct VerifyParams {
  std::optional<int> n;      // maximum order n
  std::optional<int> d;      // maximum degree d
  std::uint64_t seed = 1;
  std::optional<int> cases;  // random cases per parameter point
  bool verbose = false;
  Limits limits = default_limits();

  int n_or(int fallback) const { return n.value_or(fallback); }
  int d_or(int fallback) const { return d.value_or(fallback); }
  int cases_or(int fallback) const { return cases.value_or(fallback); }
};

struct IdentityReport {
  std::string identity;
  Json parameters = Json::object();
  long cases = 0;
  bool all_passed = true;
  std::optional<Json> first_failure;
  Json witnesses = Json::array();  // filled only in verbose mode
  Json details = Json::object();

  Json to_json() const {
    Json j;
    j["identity"] = identity;
    j["parameters"] = parameters;
    j["cases"] = cases;
    j["all_passed"] = all_passed;
    if (first_failure) j["first_failure"] = *first_failure;
    if (!details.empty()) j["details"] = details;
    if (!witnesses.empty()) j["witnesses"] = witnesses;
    return j;
  }
};

namespace detail {

inline Json rationals_json(const Sequence& s) { return Json(to_strings(s)); }

// Records one comparison. The first mismatch becomes the failure locator.
class Recorder {
 public:
  Recorder(IdentityReport& report, bool verbose) : report_(report), verbose_(verbose) {}

  bool check(bool ok, const std::function<Json()>& locator) {
    ++report_.cases;
    if (verbose_) {
      Json w = locator();
      w["passed"] = ok;
      report_.witnesses.push_back(std::move(w));
    }
    if (!ok && report_.all_passed) {
      report_.all_passed = false;
      Json loc = locator();
      loc["identity"] = report_.identity;
      report_.first_failure = std::move(loc);
    }
    return ok;
  }

  bool equal(const Rational& lhs, const Rational& rhs, Json where) {
    return check(lhs == rhs, [&] {
      Json j = where;
      j["lhs"] = lhs.get_str();
      j["rhs"] = rhs.get_str();
      return j;
    });
  }

 private:
  IdentityReport& report_;
  bool verbose_;
};

inline std::vector<Rational> lambda_samples() {
  return {ratio(1, 3), ratio(1, 2), Rational(1), Rational(2), ratio(3, 2), Rational(3), ratio(5, 7), Rational(-2)};
}

inline Rational evaluate_integer_poly(const std::vector<long>& coeffs, const Rational& x) {
  Rational out = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) out = out * x + Rational(*it);
  return out;
}

}  // namespace detail

// Cumulant and moment product formulas against the direct boxtimes_d computation.
inline IdentityReport verify_thm11(const VerifyParams& params, bool cumulant_display, bool moment_display,
                                   const std::string& name) {
  IdentityReport report;
  report.identity = name;
  const int d_max = params.d_or(8), n_max = params.n_or(d_max), cases = params.cases_or(200);
  report.parameters = {{"d_min", 2}, {"d_max", d_max}, {"n_max", n_max}, {"cases_per_d", cases}};
  detail::Recorder rec(report, params.verbose);
  RandomRationals rng(params.seed);
  for (int d = 2; d <= d_max; ++d) {
    for (int c = 0; c < cases; ++c) {
      const MonicPoly p = rng.monic(d), q = rng.monic(d);
      const MonicPoly pq = boxtimes(p, q);
      const Sequence kp = cumulants(p, params.limits).k;
      const int top = std::min(d, n_max);
      const Sequence kpq = cumulant_display ? cumulants(pq, params.limits).k : Sequence{};
      const Sequence kq = cumulant_display ? cumulants(q, params.limits).k : Sequence{};
      const Sequence mq = moments(q, d).m, mpq = moments(pq, d).m;
      for (int n = 1; n <= top; ++n) {
        auto where = [&](const char* display) {
          return Json{{"display", display}, {"n", n}, {"d", d}, {"case", c},
                      {"p", Json(to_strings(p.coefficients()))}, {"q", Json(to_strings(q.coefficients()))}};
        };
        if (cumulant_display) {
          rec.equal(product_cumulant_rhs(n, d, kp, kq, params.limits), kpq[static_cast<std::size_t>(n - 1)], where("cumulant"));
        }
        if (moment_display) {
          rec.equal(product_moment_rhs(n, d, kp, mq, params.limits), mpq[static_cast<std::size_t>(n - 1)], where("moment"));
        }
      }
    }
  }
  return report;
}

// Layer k = 0 against NC(n) with Kreweras, and layer k = 1
// against the annular enumerator over ordered (r, s).
inline IdentityReport verify_layer_lemma(const VerifyParams& params, int k, const std::string& name) {
  IdentityReport report;
  report.identity = name;
  const int n_max = params.n_or(7), cases = params.cases_or(50);
  report.parameters = {{"n_max", n_max}, {"k", k}, {"cases_per_n", cases}};
  detail::Recorder rec(report, params.verbose);
  RandomRationals rng(params.seed);
  for (int n = std::max(1, k + 1); n <= n_max; ++n) {
    for (int c = 0; c < cases; ++c) {
      const Sequence u = rng.sequence(n), v = rng.sequence(n);
      const Rational lhs = genus_lhs(n, k, u, v, params.limits);
      const Rational rhs = k == 0 ? noncrossing_sum(n, u, v, params.limits) : annular_sum(n, u, v, params.limits);
      rec.equal(lhs, rhs, {{"n", n}, {"k", k}, {"case", c}, {"u", detail::rationals_json(u)}, {"v", detail::rationals_json(v)}});
    }
  }
  return report;
}

// Genus decomposition: pair-sum layer k against (-1)^k sum_g s_k^{(g)}.
inline IdentityReport verify_thm43(const VerifyParams& params) {
  IdentityReport report;
  report.identity = "thm4.3";
  const int n_max = params.n_or(7), cases = params.cases_or(50);
  report.parameters = {{"n_max", n_max}, {"k_range", "0..n-1"}, {"cases_per_n", cases}};
  detail::Recorder rec(report, params.verbose);
  RandomRationals rng(params.seed);
  for (int n = 1; n <= n_max; ++n) {
    for (int c = 0; c < cases; ++c) {
      const Sequence u = rng.sequence(n), v = rng.sequence(n);
      for (int k = 0; k <= n - 1; ++k) {
        rec.equal(genus_lhs(n, k, u, v, params.limits), genus_rhs(n, k, u, v, params.limits),
                  {{"n", n}, {"k", k}, {"case", c}, {"u", detail::rationals_json(u)}, {"v", detail::rationals_json(v)}});
      }
    }
  }
  return report;
}

// First-order term: (1/d)^1 coefficient of m_n against the annular sum.
inline IdentityReport verify_thm13(const VerifyParams& params) {
  IdentityReport report;
  report.identity = "thm1.3";
  const int n_max = params.n_or(8), cases = params.cases_or(20);
  report.parameters = {{"n_max", n_max}, {"profiles", "hermite, laguerre 1/3, 1, 2, random"}, {"random_profiles", cases}};
  detail::Recorder rec(report, params.verbose);
  std::vector<std::pair<std::string, Sequence>> profiles{
      {"hermite", FamilySpec::hermite().cumulant_profile(n_max)},
      {"laguerre(1/3)", FamilySpec::laguerre(ratio(1, 3)).cumulant_profile(n_max)},
      {"laguerre(1)", FamilySpec::laguerre(1).cumulant_profile(n_max)},
      {"laguerre(2)", FamilySpec::laguerre(2).cumulant_profile(n_max)}};
  RandomRationals rng(params.seed);
  for (int c = 0; c < cases; ++c) profiles.emplace_back("random#" + std::to_string(c), rng.sequence(n_max));
  for (const auto& [label, k] : profiles) {
    const Sequence ones(static_cast<std::size_t>(n_max), Rational(1));
    for (int n = 1; n <= n_max; ++n) {
      const Rational lhs = order_d_expansion(n, k, params.limits).coefficient(1);
      const Rational rhs = n == 1 ? Rational(0) : annular_sum(n, k, ones, params.limits);
      rec.equal(lhs, rhs, {{"profile", label}, {"n", n}, {"cumulants", detail::rationals_json(k)}});
    }
  }
  return report;
}

// Compound Poisson: m_n(p) = kappa_n(p boxtimes_d L).
inline IdentityReport verify_lemma32(const VerifyParams& params) {
  IdentityReport report;
  report.identity = "lemma3.2";
  const int d_max = params.d_or(8), cases = params.cases_or(50);
  report.parameters = {{"d_max", d_max}, {"cases_per_d", cases}, {"fixed", "(x-1)^d, x^d"}};
  detail::Recorder rec(report, params.verbose);
  RandomRationals rng(params.seed);
  for (int d = 1; d <= d_max; ++d) {
    std::vector<std::pair<std::string, MonicPoly>> polys{{"(x-1)^d", power_family(d, 1)}, {"x^d", power_family(d, 0)}};
    for (int c = 0; c < cases; ++c) polys.emplace_back("random#" + std::to_string(c), rng.monic(d));
    for (const auto& [label, p] : polys) {
      const CompoundPoissonResult r = compound_poisson_check(p, params.limits);
      rec.check(r.passed, [&] {
        return Json{{"d", d}, {"polynomial", label}, {"a", Json(to_strings(p.coefficients()))}, {"n", r.first_failure},
                    {"moments", detail::rationals_json(r.moments)},
                    {"cumulants_of_product", detail::rationals_json(r.cumulants_of_product)}};
      });
    }
  }
  return report;
}

inline IdentityReport verify_mobius_algebra(const VerifyParams& params) {
  IdentityReport report;
  report.identity = "mobius-algebra";
  const int n_max = params.n_or(5), cases = params.cases_or(20);
  report.parameters = {{"n_max", n_max}, {"cases_per_n", cases}, {"fixed", "f = delta_{0_n}"}};
  detail::Recorder rec(report, params.verbose);
  RandomRationals rng(params.seed);
  for (int n = 1; n <= n_max; ++n) {
    const std::size_t size = enumerate_partitions(n, params.limits).size();
    std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> pairs;
    std::vector<Rational> delta(size, Rational(0));
    delta[0] = 1;  // 0_n is first in lexicographic order of the restricted-growth string
    pairs.emplace_back(delta, rng.sequence(static_cast<int>(size)));
    for (int c = 0; c < cases; ++c) pairs.emplace_back(rng.sequence(static_cast<int>(size)), rng.sequence(static_cast<int>(size)));
    for (std::size_t c = 0; c < pairs.size(); ++c) {
      const MobiusAlgebraResult r = mobius_algebra_check(n, pairs[c].first, pairs[c].second, params.limits);
      rec.check(r.passed, [&] {
        Json j{{"n", n}, {"case", c}};
        if (r.first_failure) {
          j["pi"] = r.first_failure->to_string();
          j["F(f*g)"] = r.lhs.get_str();
          j["F(f)F(g)"] = r.rhs.get_str();
        }
        return j;
      });
    }
  }
  return report;
}

inline IdentityReport verify_count(const VerifyParams& params, bool a_formula) {
  IdentityReport report;
  report.identity = a_formula ? "count-A" : "count-B";
  const int n_max = params.n_or(7);
  report.parameters = {{"n_max", n_max}, {"type_pairs", "all with |s|+|t|=n+1"}};
  detail::Recorder rec(report, params.verbose);
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& [s, t] : admissible_type_pairs(n)) {
      const Integer formula = a_formula ? count_A(s, t) : count_B(s, t);
      const Integer counted = a_formula ? count_A_enumerated(s, t, params.limits) : count_B_enumerated(s, t, params.limits);
      rec.equal(Rational(formula), Rational(counted), {{"n", n}, {"s", s.to_string()}, {"t", t.to_string()}});
    }
  }
  if (!a_formula) {
    // The k = 0 pair layer regrouped by type: (-1)^{n-1}/(n-1)! sum B(s,t) mu(s) mu(t) u_s v_t.
    RandomRationals rng(params.seed);
    const int cases = params.cases_or(5);
    for (int n = 1; n <= n_max; ++n) {
      for (int c = 0; c < cases; ++c) {
        const Sequence u = rng.sequence(n), v = rng.sequence(n);
        Rational sum = 0;
        for (const auto& [s, t] : admissible_type_pairs(n)) {
          sum += Rational(count_B(s, t) * mobius_zero(s) * mobius_zero(t)) * type_weight(u, s) * type_weight(v, t);
        }
        sum *= sign_power(n - 1) / Rational(factorial(static_cast<unsigned long>(n - 1)));
        rec.equal(sum, genus_lhs(n, 0, u, v, params.limits), {{"n", n}, {"check", "type-regrouped k=0 layer"}, {"case", c}});
      }
    }
  }
  return report;
}

// Infinitesimal constants by three independent routes.
inline IdentityReport verify_infinitesimal_constants(const VerifyParams& params) {
  IdentityReport report;
  report.identity = "infinitesimal-constants";
  const int order = params.n_or(8), lambda_order = std::min(order, 7);
  report.parameters = {{"order", order}, {"general_lambda_order", lambda_order},
                       {"lambda_samples", Json(to_strings(detail::lambda_samples()))}};
  detail::Recorder rec(report, params.verbose);

  auto closed_check = [&](const std::string& label, const Sequence& k, const std::function<Rational(int)>& expected) {
    const InfinitesimalPaths paths = infinitesimal_paths(k, order, params.limits);
    for (int n = 1; n <= order; ++n) {
      const std::size_t i = static_cast<std::size_t>(n - 1);
      rec.check(paths.annular[i] == paths.series[i] && paths.series[i] == paths.expansion[i] && paths.annular[i] == expected(n), [&] {
        return Json{{"profile", label}, {"n", n}, {"annular", paths.annular[i].get_str()}, {"series", paths.series[i].get_str()},
                    {"expansion", paths.expansion[i].get_str()}, {"expected", expected(n).get_str()}};
      });
    }
    report.details[label] = detail::rationals_json(paths.annular);
  };

  closed_check("hermite", FamilySpec::hermite().cumulant_profile(order), [](int n) -> Rational {
    if (n % 2 == 1) return Rational(0);
    const int h = n / 2;
    return ratio(1, 2) * Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(h)) -
                                  power(Rational(4), h));
  });
  closed_check("laguerre(1)", FamilySpec::laguerre(1).cumulant_profile(order), [](int n) -> Rational {
    return ratio(1, 2) * Rational(binomial(static_cast<unsigned long>(2 * n), static_cast<unsigned long>(n))) -
           power(Rational(4), n - 1);
  });

  // |m'_n| for general lambda, coefficients of lambda^0, lambda^1, ...
  const std::vector<std::vector<long>> polys{{0},
                                             {0, 1},
                                             {0, 3, 3},
                                             {0, 6, 17, 6},
                                             {0, 10, 55, 55, 10},
                                             {0, 15, 135, 262, 135, 15},
                                             {0, 21, 280, 889, 889, 280, 21}};
  for (const auto& lambda : detail::lambda_samples()) {
    const Sequence k(static_cast<std::size_t>(lambda_order), lambda);
    const InfinitesimalPaths paths = infinitesimal_paths(k, lambda_order, params.limits);
    for (int n = 1; n <= lambda_order; ++n) {
      const std::size_t i = static_cast<std::size_t>(n - 1);
      const Rational expected = -detail::evaluate_integer_poly(polys[i], lambda);
      rec.check(paths.annular[i] == paths.series[i] && paths.series[i] == paths.expansion[i] && paths.annular[i] == expected, [&] {
        return Json{{"profile", "laguerre(" + lambda.get_str() + ")"}, {"n", n}, {"annular", paths.annular[i].get_str()},
                    {"series", paths.series[i].get_str()}, {"expansion", paths.expansion[i].get_str()},
                    {"expected", expected.get_str()}};
      });
    }
  }
  return report;
}

// Infinitesimal transforms: the K-form of R_inf, and the inverse Markov identity.
inline IdentityReport verify_thm52(const VerifyParams& params) {
  IdentityReport report;
  report.identity = "thm5.2";
  const int order = params.n_or(9);
  report.parameters = {{"order", order}, {"profiles", "semicircle, free-poisson 1/3, 1, 2, dirac 2, -1/2"}};
  detail::Recorder rec(report, params.verbose);
  std::vector<std::pair<std::string, Sequence>> profiles{
      {"semicircle", FamilySpec::hermite().cumulant_profile(order)},
      {"free-poisson(1/3)", FamilySpec::laguerre(ratio(1, 3)).cumulant_profile(order)},
      {"free-poisson(1)", FamilySpec::laguerre(1).cumulant_profile(order)},
      {"free-poisson(2)", FamilySpec::laguerre(2).cumulant_profile(order)},
      {"dirac(2)", FamilySpec::power(2).cumulant_profile(order)},
      {"dirac(-1/2)", FamilySpec::power(ratio(-1, 2)).cumulant_profile(order)}};
  for (const auto& [label, k] : profiles) {
    const Sequence m = free_moments_from_cumulants(k, order, params.limits);
    const LaurentSeries g = cauchy_from_moments(m);
    const LaurentSeries kt = k_transform(g);
    // K recovers the cumulants.
    const Sequence recovered = cumulants_from_k(kt, order);
    for (int n = 1; n <= order; ++n) {
      rec.equal(recovered[static_cast<std::size_t>(n - 1)], k[static_cast<std::size_t>(n - 1)],
                {{"profile", label}, {"check", "K-transform recovers kappa_n"}, {"n", n}});
    }
    const LaurentSeries g_inf = g_inf_from_cauchy(g);
    const LaurentSeries r_inf = r_inf_from_k(kt);
    const LaurentSeries r_inf_alt = r_inf_via_g_inf(g, g_inf);
    for (int n = 1; n <= order; ++n) {
      rec.equal(r_inf.coefficient(n - 1), r_inf_alt.coefficient(n - 1),
                {{"profile", label}, {"check", "R_inf = -K' G_inf(K)"}, {"n", n}});
    }
    const SeriesComparison markov = markov_identity_check(m, order);
    rec.check(markov.passed, [&] { return Json{{"profile", label}, {"check", "mu' = (M(mu) - M(M(mu)))/2"}, {"at", markov.first_failure}}; });
    report.details[label] = {{"kappa_prime", detail::rationals_json(infinitesimal_cumulants(r_inf, order))},
                             {"m_prime", detail::rationals_json(infinitesimal_moments(g_inf, order))}};
  }
  // Closed forms: semicircle kappa'_{2n} = -1, kappa'_{odd} = 0; free Poisson kappa'_n = -sum_{j>=1} C(n,2j) lambda^j.
  const Sequence sc = infinitesimal_cumulants(r_inf_from_k(k_transform(cauchy_from_moments(
                                                  free_moments_from_cumulants(FamilySpec::hermite().cumulant_profile(order), order, params.limits)))),
                                              order);
  for (int n = 1; n <= order; ++n) {
    rec.equal(sc[static_cast<std::size_t>(n - 1)], Rational(n % 2 == 0 ? -1 : 0), {{"profile", "semicircle"}, {"check", "kappa'_n closed form"}, {"n", n}});
  }
  for (const Rational& lambda : {ratio(1, 3), Rational(1), Rational(2)}) {
    const Sequence kp = infinitesimal_cumulants(r_inf_from_k(k_transform(cauchy_from_moments(
                                                    free_moments_from_cumulants(FamilySpec::laguerre(lambda).cumulant_profile(order), order, params.limits)))),
                                                order);
    for (int n = 1; n <= order; ++n) {
      Rational expected = 0;
      for (int j = 1; 2 * j <= n; ++j) {
        expected -= Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(2 * j))) * power(lambda, j);
      }
      rec.equal(kp[static_cast<std::size_t>(n - 1)], expected,
                {{"profile", "free-poisson(" + lambda.get_str() + ")"}, {"check", "kappa'_n closed form"}, {"n", n}});
    }
  }
  return report;
}

inline IdentityReport verify_lemma21(const VerifyParams& params) {
  IdentityReport report;
  report.identity = "lemma2.1";
  const int order = params.n_or(8);
  report.parameters = {{"total_order", order}, {"profiles", "semicircle, free-poisson 1/3, 1, 2, zero"}};
  detail::Recorder rec(report, params.verbose);
  std::vector<std::pair<std::string, Sequence>> profiles{
      {"semicircle", FamilySpec::hermite().cumulant_profile(order)},
      {"free-poisson(1/3)", FamilySpec::laguerre(ratio(1, 3)).cumulant_profile(order)},
      {"free-poisson(1)", FamilySpec::laguerre(1).cumulant_profile(order)},
      {"free-poisson(2)", FamilySpec::laguerre(2).cumulant_profile(order)},
      {"zero", Sequence(static_cast<std::size_t>(order), Rational(0))}};
  for (const auto& [label, k] : profiles) {
    const SecondOrderResult r = second_order_functional_check(k, order, params.limits);
    rec.check(r.passed, [&] { return Json{{"profile", label}, {"at", r.first_failure}}; });
    if (label == "semicircle") rec.equal(r.alpha[1][1], 1, {{"profile", label}, {"check", "alpha_{1,1} = 1"}});
  }
  return report;
}

// Fractional-power identity and the finite-d convergence trends.
inline IdentityReport verify_trends(const VerifyParams& params) {
  IdentityReport report;
  report.identity = "trends";
  const std::vector<int> ds{8, 16, 32, 64};
  report.parameters = {{"degrees", ds}, {"ratio_window", {1.5, 2.5}}, {"boxtimes_n_max", 4}, {"derivative_flow_n_max", 3},
                       {"t", "1/2"}};
  detail::Recorder rec(report, params.verbose);
  auto judge = [&](const std::string& label, const TrendReport& t) {
    Json rows = Json::array();
    bool ok = true;
    for (const auto& row : t.rows) {
      Json r{{"d", row.d}, {"finite", row.finite.get_str()}, {"limit", row.limit.get_str()}, {"gap", row.gap.get_str()}};
      if (row.ratio) r["ratio"] = *row.ratio;
      rows.push_back(r);
    }
    if (!t.exact) {
      for (std::size_t i = 1; i < t.rows.size(); ++i) {
        if (!t.rows[i].ratio || *t.rows[i].ratio < 1.5 || *t.rows[i].ratio > 2.5) ok = false;
      }
    }
    report.details[label + " n=" + std::to_string(t.n)] = {{"exact", t.exact}, {"rows", rows}};
    rec.check(ok, [&] { return Json{{"trend", label}, {"n", t.n}, {"rows", rows}}; });
  };
  for (int n = 1; n <= 4; ++n) judge("hermite boxtimes laguerre(1)", boxtimes_trend(FamilySpec::hermite(), FamilySpec::laguerre(1), n, ds, params.limits));
  for (int n = 1; n <= 3; ++n) judge("hermite derivative flow", derivative_flow_trend(FamilySpec::hermite(), ratio(1, 2), n, ds, params.limits));
  return report;
}

// Fractional-power identity at series level.
inline IdentityReport verify_fractional(const VerifyParams& params) {
  IdentityReport report;
  report.identity = "fractional";
  const int order = params.n_or(6);
  report.parameters = {{"order", order}};
  detail::Recorder rec(report, params.verbose);
  const std::vector<std::tuple<std::string, Sequence, Rational>> runs{
      {"semicircle", FamilySpec::hermite().cumulant_profile(order), ratio(1, 2)},
      {"free-poisson(1)", FamilySpec::laguerre(1).cumulant_profile(order), ratio(1, 3)},
      {"dirac(3/2)", FamilySpec::power(ratio(3, 2)).cumulant_profile(order), ratio(2, 5)}};
  for (const auto& [label, k, t] : runs) {
    const FractionalResult r = fractional_identity_check(k, t, order, params.limits);
    rec.check(r.passed, [&] {
      return Json{{"profile", label}, {"t", t.get_str()}, {"n", r.first_failure}, {"lhs", detail::rationals_json(r.lhs)},
                  {"rhs", detail::rationals_json(r.rhs)}};
    });
  }
  return report;
}

// Single identities and the composites that each acceptance criterion maps onto.
inline const std::map<std::string, std::vector<std::string>>& identity_groups() {
  static const std::map<std::string, std::vector<std::string>> groups{
      {"thm1.1", {"thm1.1-cumulant", "thm1.1-moment"}},
      {"genus-expansion", {"thm4.3", "lemma3.3", "lemma4.5"}},
      {"appendix", {"mobius-algebra", "count-A", "count-B"}},
  };
  return groups;
}

inline std::vector<std::string> identity_names() {
  return {"thm1.1-cumulant", "thm1.1-moment", "lemma3.3", "lemma4.5", "thm4.3", "thm1.3", "lemma3.2", "mobius-algebra",
          "count-A", "count-B", "thm1.1", "genus-expansion", "appendix", "infinitesimal-constants", "thm5.2", "lemma2.1",
          "trends", "fractional"};
}

inline std::vector<IdentityReport> verify_identity(const std::string& name, const VerifyParams& params) {
  const auto& groups = identity_groups();
  if (auto it = groups.find(name); it != groups.end()) {
    std::vector<IdentityReport> out;
    for (const auto& member : it->second) {
      auto part = verify_identity(member, params);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (name == "thm1.1-cumulant") return {verify_thm11(params, true, false, name)};
  if (name == "thm1.1-moment") return {verify_thm11(params, false, true, name)};
  if (name == "lemma3.3") return {verify_layer_lemma(params, 0, name)};
  if (name == "lemma4.5") return {verify_layer_lemma(params, 1, name)};
  if (name == "thm4.3") return {verify_thm43(params)};
  if (name == "thm1.3") return {verify_thm13(params)};
  if (name == "lemma3.2") return {verify_lemma32(params)};
  if (name == "mobius-algebra") return {verify_mobius_algebra(params)};
  if (name == "count-A") return {verify_count(params, true)};
  if (name == "count-B") return {verify_count(params, false)};
  if (name == "infinitesimal-constants") return {verify_infinitesimal_constants(params)};
  if (name == "thm5.2") return {verify_thm52(params)};
  if (name == "lemma2.1") return {verify_lemma21(params)};
  if (name == "trends") return {verify_trends(params)};
  if (name == "fractional") return {verify_fractional(params)};
  throw parse_error("unknown identity '" + name + "'");
}

}  // namespace ffp
