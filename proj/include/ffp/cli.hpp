#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ffp/ffp.hpp"

#ifndef FFP_VERSION
#define FFP_VERSION "0.1.0"
#endif

namespace ffp::cli {

inline constexpr const char* kSchemaVersion = "1";

struct Options {
  // shared
  std::string emit = "json";
  std::string output;
  std::string caps;
  std::uint64_t seed = 1;
  // polynomial inputs
  std::string p_text, q_text, op = "times";
  int upto = 0;
  // families
  std::string family = "hermite";
  std::string a_text = "0", lambda_text = "1", t_text = "1/2";
  int d = 0, n = 0, order = 0, k = -1, cases = 0;
  std::string identity, u_text, v_text, ds_text = "8,16,32,64", in_text, transform_op = "k";
  bool verbose = false;
};

inline std::string read_source(const std::string& text) {
  if (!text.empty() && (text.front() == '{' || text.front() == '[')) return text;
  std::ifstream in(text);
  if (!in) throw parse_error("cannot read '" + text + "' (pass inline JSON or a readable file path)");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline nlohmann::json parse_json_source(const std::string& text) {
  try {
    return nlohmann::json::parse(read_source(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("malformed JSON: ") + e.what());
  }
}

inline Sequence parse_list(const std::string& text) {
  Sequence out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_rational(item));
  }
  return out;
}

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw parse_error("'" + item + "' is not an integer");
    }
  }
  return out;
}

inline Json series_json(const LaurentSeries& s, const std::string& variable) {
  Json terms = Json::array();
  for (int e = s.valuation(); e <= s.precision(); ++e) {
    terms.push_back({{"exponent", e}, {"coefficient", s.coefficient(e).get_str()}});
  }
  return {{"variable", variable}, {"known_through", s.precision()}, {"terms", terms}};
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"Exact finite free probability toolkit", "ffp"};
    app.set_version_flag("--version", std::string(FFP_VERSION));
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--caps", o_.caps, "Cap overrides, e.g. pair_sweep=9,permutations=10 (also FFP_CAPS)");
    app.add_option("--emit", o_.emit, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_option("--output", o_.output, "Write the report to this file instead of stdout");
    app.add_option("--seed", o_.seed, "Seed for random test inputs");

    auto* convolve = app.add_subcommand("convolve", "p boxplus_d q or p boxtimes_d q");
    convolve->add_option("--p", o_.p_text, "Polynomial JSON ({\"roots\":[..]} or {\"a\":[..]}) or file")->required();
    convolve->add_option("--q", o_.q_text, "Polynomial JSON or file")->required();
    convolve->add_option("--op", o_.op, "plus or times")->check(CLI::IsMember({"plus", "times"}));

    auto* cumulants_cmd = app.add_subcommand("cumulants", "Finite free cumulants of a polynomial");
    cumulants_cmd->add_option("--p", o_.p_text, "Polynomial JSON or file")->required();
    cumulants_cmd->add_option("--upto", o_.upto, "Highest order (default d)");

    auto* moments_cmd = app.add_subcommand("moments", "Moments of the root distribution");
    moments_cmd->add_option("--p", o_.p_text, "Polynomial JSON or file")->required();
    moments_cmd->add_option("--order", o_.order, "Highest order (default d)");

    auto add_family = [&](CLI::App* sub) {
      sub->add_option("--family", o_.family, "power, hermite or laguerre")->check(CLI::IsMember({"power", "hermite", "laguerre"}));
      sub->add_option("--a", o_.a_text, "Root of the power family (num/den)");
      sub->add_option("--lambda", o_.lambda_text, "Laguerre parameter (num/den)");
    };

    auto* family_cmd = app.add_subcommand("family", "Build a named polynomial family member");
    add_family(family_cmd);
    family_cmd->add_option("--d", o_.d, "Degree")->required();

    auto* verify = app.add_subcommand("verify", "Verify an identity exhaustively or on seeded random inputs");
    verify->add_option("--identity", o_.identity, "Identity name")->required()->check(CLI::IsMember(identity_names()));
    verify->add_option("--n", o_.n, "Maximum order n");
    verify->add_option("--d", o_.d, "Maximum degree d");
    verify->add_option("--cases", o_.cases, "Random cases per parameter point");
    verify->add_flag("--verbose", o_.verbose, "Include per-case witnesses");

    auto* genus = app.add_subcommand("genus-table", "Genus layers s_k^(g) against the pair-sum layers");
    genus->add_option("--n", o_.n, "Order n")->required();
    genus->add_option("--k", o_.k, "Single layer k (default all)");
    genus->add_option("--u", o_.u_text, "Weights u_1..u_n, comma separated (default all 1)");
    genus->add_option("--v", o_.v_text, "Weights v_1..v_n, comma separated (default all 1)");

    auto* expand = app.add_subcommand("expand", "m_n as an exact polynomial in 1/d");
    add_family(expand);
    expand->add_option("--n", o_.n, "Order n (default: orders 1..6)");

    auto* infinitesimal = app.add_subcommand("infinitesimal", "Infinitesimal moments and cumulants by three routes");
    add_family(infinitesimal);
    infinitesimal->add_option("--order", o_.order, "Highest order (default 8)");

    auto* flow = app.add_subcommand("derivative-flow", "Finite-d gaps of repeated differentiation against free powers");
    add_family(flow);
    flow->add_option("--t", o_.t_text, "Fraction t in (0,1)");
    flow->add_option("--n", o_.n, "Moment order (default 2)");
    flow->add_option("--ds", o_.ds_text, "Degrees, comma separated");

    auto* transform = app.add_subcommand("transform", "Series transforms of a moment profile");
    transform->add_option("--in", o_.in_text, "JSON {\"m\": [...]} (moments m_1..m_N) or file")->required();
    transform->add_option("--op", o_.transform_op, "cauchy, k, r, markov, ginf or rinf")
        ->check(CLI::IsMember({"cauchy", "k", "r", "markov", "ginf", "rinf"}));

    std::vector<std::string> argv_store{"ffp"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out_, err_);
      return code == 0 ? 0 : 2;
    }

    try {
      limits_ = o_.caps.empty() ? default_limits() : Limits::parse(o_.caps, default_limits());
      CLI::App* sub = app.get_subcommands().front();
      subcommand_ = sub->get_name();
      if (subcommand_ == "convolve") return do_convolve();
      if (subcommand_ == "cumulants") return do_cumulants();
      if (subcommand_ == "moments") return do_moments();
      if (subcommand_ == "family") return do_family();
      if (subcommand_ == "verify") return do_verify();
      if (subcommand_ == "genus-table") return do_genus_table();
      if (subcommand_ == "expand") return do_expand();
      if (subcommand_ == "infinitesimal") return do_infinitesimal();
      if (subcommand_ == "derivative-flow") return do_flow();
      if (subcommand_ == "transform") return do_transform();
      throw parse_error("unknown subcommand");
    } catch (const invariant_error& e) {
      err_ << "ffp: internal invariant failed: " << e.what() << "\n";
      return 1;
    } catch (const ffp::error& e) {
      err_ << "ffp: " << e.what() << "\n";
      return 2;
    }
  }

 private:
  Json report(Json params, Json results, bool all_passed) const {
    params["caps"] = limits_.to_string();
    Json j;
    j["tool_version"] = FFP_VERSION;
    j["schema_version"] = kSchemaVersion;
    j["subcommand"] = subcommand_;
    j["params"] = std::move(params);
    j["seed"] = o_.seed;
    j["results"] = std::move(results);
    j["all_passed"] = all_passed;
    return j;
  }

  void write(const std::string& text) {
    if (o_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream file(o_.output);
    if (!file) throw parse_error("cannot write '" + o_.output + "'");
    file << text;
  }

  void write_json(const Json& j) { write(j.dump(2) + "\n"); }

  FamilySpec family() const {
    return FamilySpec::parse(o_.family, parse_rational(o_.a_text), parse_rational(o_.lambda_text));
  }

  Json family_params() const {
    Json p{{"family", o_.family}};
    if (o_.family == "power") p["a"] = parse_rational(o_.a_text).get_str();
    if (o_.family == "laguerre") p["lambda"] = parse_rational(o_.lambda_text).get_str();
    return p;
  }

  int do_convolve() {
    const MonicPoly p = poly_from_json(parse_json_source(o_.p_text));
    const MonicPoly q = poly_from_json(parse_json_source(o_.q_text));
    const MonicPoly r = o_.op == "plus" ? boxplus(p, q) : boxtimes(p, q);
    if (o_.emit == "pretty") {
      write(r.to_string() + "\n");
    } else if (o_.emit == "csv") {
      std::string s = "i,a_i\n";
      for (int i = 0; i <= r.degree(); ++i) s += std::to_string(i) + "," + r.a(i).get_str() + "\n";
      write(s);
    } else {
      write_json(report({{"op", o_.op}, {"d", p.degree()}}, Json::array({{{"p", to_json(p)}, {"q", to_json(q)}, {"result", to_json(r)}}}), true));
    }
    return 0;
  }

  int do_cumulants() {
    const MonicPoly p = poly_from_json(parse_json_source(o_.p_text));
    const int upto = o_.upto > 0 ? o_.upto : p.degree();
    const CumulantVector k = cumulants(p, upto, limits_);
    return emit_sequence("kappa", k.k, {{"d", p.degree()}, {"upto", upto}});
  }

  int do_moments() {
    const MonicPoly p = poly_from_json(parse_json_source(o_.p_text));
    const int order = o_.order > 0 ? o_.order : p.degree();
    return emit_sequence("m", moments(p, order).m, {{"d", p.degree()}, {"order", order}});
  }

  int emit_sequence(const std::string& name, const Sequence& values, Json params) {
    if (o_.emit == "csv") {
      std::string s = "n," + name + "_n\n";
      for (std::size_t i = 0; i < values.size(); ++i) s += std::to_string(i + 1) + "," + values[i].get_str() + "\n";
      write(s);
    } else if (o_.emit == "pretty") {
      std::string s;
      for (std::size_t i = 0; i < values.size(); ++i) s += name + "_" + std::to_string(i + 1) + " = " + values[i].get_str() + "\n";
      write(s);
    } else {
      write_json(report(std::move(params), Json::array({{{name, Json(to_strings(values))}}}), true));
    }
    return 0;
  }

  int do_family() {
    if (o_.d < 1) throw parse_error("--d must be >= 1");
    const FamilySpec spec = family();
    const MonicPoly p = spec.build(o_.d);
    if (o_.emit == "pretty") {
      write(p.to_string() + "\n");
    } else if (o_.emit == "csv") {
      std::string s = "i,a_i,monomial_coefficient\n";
      const auto c = p.monomial_coefficients();
      for (int i = 0; i <= p.degree(); ++i) s += std::to_string(i) + "," + p.a(i).get_str() + "," + c[static_cast<std::size_t>(i)].get_str() + "\n";
      write(s);
    } else {
      Json params = family_params();
      params["d"] = o_.d;
      Json result = to_json(p);
      result["kappa"] = to_strings(cumulants(p, limits_).k);
      write_json(report(params, Json::array({result}), true));
    }
    return 0;
  }

  int do_verify() {
    VerifyParams params;
    params.seed = o_.seed;
    params.verbose = o_.verbose;
    params.limits = limits_;
    if (o_.n > 0) params.n = o_.n;
    if (o_.d > 0) params.d = o_.d;
    if (o_.cases > 0) params.cases = o_.cases;
    const auto reports = verify_identity(o_.identity, params);
    bool all = true;
    Json results = Json::array();
    for (const auto& r : reports) {
      all = all && r.all_passed;
      results.push_back(r.to_json());
      if (!r.all_passed && r.first_failure) err_ << "ffp: identity " << r.identity << " failed at " << r.first_failure->dump() << "\n";
    }
    Json p{{"identity", o_.identity}};
    if (params.n) p["n"] = *params.n;
    if (params.d) p["d"] = *params.d;
    if (params.cases) p["cases"] = *params.cases;
    if (o_.emit == "csv") {
      std::string s = "identity,cases,all_passed\n";
      for (const auto& r : reports) s += r.identity + "," + std::to_string(r.cases) + "," + (r.all_passed ? "true" : "false") + "\n";
      write(s);
    } else if (o_.emit == "pretty") {
      std::string s;
      for (const auto& r : reports) s += r.identity + ": " + (r.all_passed ? "PASS" : "FAIL") + " (" + std::to_string(r.cases) + " cases)\n";
      write(s);
    } else {
      write_json(report(p, results, all));
    }
    return all ? 0 : 1;
  }

  Sequence weights(const std::string& text, int n, const char* name) const {
    if (text.empty()) return Sequence(static_cast<std::size_t>(n), Rational(1));
    Sequence w = parse_list(text);
    if (static_cast<int>(w.size()) < n) throw parse_error(std::string(name) + " needs at least n entries");
    return w;
  }

  int do_genus_table() {
    const int n = o_.n;
    if (n < 1) throw parse_error("--n must be >= 1");
    const Sequence u = weights(o_.u_text, n, "--u"), v = weights(o_.v_text, n, "--v");
    Json rows = Json::array();
    bool all = true;
    std::string csv = "k,g,s_k_g,lhs,rhs,match\n", pretty;
    for (int k = 0; k <= n - 1; ++k) {
      if (o_.k >= 0 && k != o_.k) continue;
      Json layers = Json::array();
      Rational sum = 0;
      for (int g = 0; 2 * g <= k; ++g) {
        const GenusLayer layer = genus_layer(n, k, g, u, v, limits_);
        sum += layer.value;
        layers.push_back({{"g", g}, {"s", layer.value.get_str()}});
      }
      const Rational lhs = genus_lhs(n, k, u, v, limits_);
      const Rational rhs = (k % 2 == 0) ? sum : Rational(-sum);
      const bool match = lhs == rhs;
      all = all && match;
      rows.push_back({{"k", k}, {"layers", layers}, {"lhs", lhs.get_str()}, {"rhs", rhs.get_str()}, {"match", match}});
      for (const auto& l : layers) {
        csv += std::to_string(k) + "," + std::to_string(l["g"].get<int>()) + "," + l["s"].get<std::string>() + "," + lhs.get_str() + "," +
               rhs.get_str() + "," + (match ? "true" : "false") + "\n";
        pretty += "k=" + std::to_string(k) + " g=" + std::to_string(l["g"].get<int>()) + "  s=" + l["s"].get<std::string>() + "\n";
      }
      pretty += "k=" + std::to_string(k) + " lhs=" + lhs.get_str() + " (-1)^k sum_g s=" + rhs.get_str() + (match ? "  ok\n" : "  MISMATCH\n");
      if (!match) err_ << "ffp: genus decomposition failed at n=" << n << " k=" << k << " lhs=" << lhs.get_str() << " rhs=" << rhs.get_str() << "\n";
    }
    if (o_.emit == "csv") write(csv);
    else if (o_.emit == "pretty") write(pretty);
    else write_json(report({{"n", n}, {"u", to_strings(u)}, {"v", to_strings(v)}}, rows, all));
    return all ? 0 : 1;
  }

  int do_expand() {
    const FamilySpec spec = family();
    std::vector<int> orders;
    if (o_.n > 0) orders.push_back(o_.n);
    else for (int n = 1; n <= 6; ++n) orders.push_back(n);
    Json results = Json::array();
    std::string pretty, csv = "n,expansion\n";
    for (int n : orders) {
      const OneOverDPoly e = order_d_expansion(n, spec.cumulant_profile(n), limits_);
      results.push_back({{"n", n}, {"coefficients", to_strings(e.coefficients())}, {"text", e.to_string()}});
      pretty += (orders.size() == 1 ? "" : "m_" + std::to_string(n) + " = ") + e.to_string() + "\n";
      csv += std::to_string(n) + ",\"" + e.to_string() + "\"\n";
    }
    // A single expansion prints bare text by default; pass --emit json for a report.
    if (o_.emit == "json" && !emit_explicit_) {
      write(pretty);
    } else if (o_.emit == "csv") {
      write(csv);
    } else if (o_.emit == "pretty") {
      write(pretty);
    } else {
      Json p = family_params();
      if (o_.n > 0) p["n"] = o_.n;
      write_json(report(p, results, true));
    }
    return 0;
  }

  int do_infinitesimal() {
    const FamilySpec spec = family();
    const int order = o_.order > 0 ? o_.order : 8;
    const InfinitesimalPaths paths = infinitesimal_paths(spec.cumulant_profile(order), order, limits_);
    Json rows = Json::array();
    std::string csv = "n,m_prime_annular,m_prime_series,m_prime_expansion,kappa_prime,agree\n";
    for (int n = 1; n <= order; ++n) {
      const std::size_t i = static_cast<std::size_t>(n - 1);
      const bool agree = paths.annular[i] == paths.series[i] && paths.series[i] == paths.expansion[i];
      rows.push_back({{"n", n}, {"m_prime", paths.annular[i].get_str()}, {"m_prime_series", paths.series[i].get_str()},
                      {"m_prime_expansion", paths.expansion[i].get_str()}, {"kappa_prime", paths.cumulants[i].get_str()},
                      {"agree", agree}});
      csv += std::to_string(n) + "," + paths.annular[i].get_str() + "," + paths.series[i].get_str() + "," +
             paths.expansion[i].get_str() + "," + paths.cumulants[i].get_str() + "," + (agree ? "true" : "false") + "\n";
    }
    if (!paths.agree) err_ << "ffp: infinitesimal paths disagree for " << spec.to_string() << "\n";
    if (o_.emit == "csv") {
      write(csv);
    } else {
      Json p = family_params();
      p["order"] = order;
      write_json(report(p, rows, paths.agree));
    }
    return paths.agree ? 0 : 1;
  }

  int do_flow() {
    const FamilySpec spec = family();
    const Rational t = parse_rational(o_.t_text);
    const int n = o_.n > 0 ? o_.n : 2;
    const std::vector<int> ds = parse_int_list(o_.ds_text);
    const TrendReport trend = derivative_flow_trend(spec, t, n, ds, limits_);
    Json rows = Json::array();
    std::string csv = "d,finite,limit,gap,ratio\n";
    const TrendRow* prev = nullptr;
    for (const auto& row : trend.rows) {
      Json r{{"d", row.d}, {"finite", row.finite.get_str()}, {"limit", row.limit.get_str()}, {"gap", row.gap.get_str()}};
      // gap(d_prev)/gap(d), exact; absent when either gap vanishes.
      std::string ratio_text;
      if (prev && prev->gap != 0 && row.gap != 0) {
        ratio_text = Rational(abs(prev->gap) / abs(row.gap)).get_str();
        r["ratio"] = ratio_text;
      }
      rows.push_back(r);
      csv += std::to_string(row.d) + "," + row.finite.get_str() + "," + row.limit.get_str() + "," + row.gap.get_str() + "," + ratio_text + "\n";
      prev = &row;
    }
    if (o_.emit == "csv") {
      write(csv);
    } else {
      Json p = family_params();
      p["t"] = t.get_str();
      p["n"] = n;
      p["ds"] = ds;
      write_json(report(p, Json::array({{{"exact", trend.exact}, {"rows", rows}}}), true));
    }
    return 0;
  }

  int do_transform() {
    const nlohmann::json in = parse_json_source(o_.in_text);
    if (!in.is_object() || !in.contains("m")) throw parse_error("transform input needs {\"m\": [m_1, ..., m_N]}");
    const Sequence m = json_rationals(in["m"], "m");
    if (m.empty()) throw parse_error("transform input needs at least m_1");
    const LaurentSeries g = cauchy_from_moments(m);
    Json result;
    const std::string& op = o_.transform_op;
    if (op == "cauchy") result = series_json(g, "w=1/z");
    else if (op == "k") result = series_json(k_transform(g), "z");
    else if (op == "r") result = series_json(r_transform(k_transform(g)), "z");
    else if (op == "markov") result = series_json(markov_transform(g), "w=1/z");
    else if (op == "ginf") result = series_json(g_inf_from_cauchy(g), "w=1/z");
    else result = series_json(r_inf_from_k(k_transform(g)), "z");
    if (o_.emit == "csv") {
      std::string s = "exponent,coefficient\n";
      for (const auto& term : result["terms"]) s += std::to_string(term["exponent"].get<int>()) + "," + term["coefficient"].get<std::string>() + "\n";
      write(s);
    } else {
      write_json(report({{"op", op}, {"m", to_strings(m)}}, Json::array({result}), true));
    }
    return 0;
  }

 public:
  bool emit_explicit_ = false;

 private:
  std::ostream& out_;
  std::ostream& err_;
  Options o_;
  Limits limits_;
  std::string subcommand_;
};

// Runs the command line (without the program name). Exit status: 0 success,
// 1 identity violation, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  Runner runner(out, err);
  for (const auto& a : args) {
    if (a == "--emit" || a.rfind("--emit=", 0) == 0) runner.emit_explicit_ = true;
  }
  return runner.run(args);
}

}  // namespace ffp::cli
