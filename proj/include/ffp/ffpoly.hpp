#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ffp/config.hpp"
#include "ffp/errors.hpp"
#include "ffp/partitions.hpp"
#include "ffp/rational.hpp"

namespace ffp {

// Monic degree-d polynomial p(x) = sum_i x^{d-i} (-1)^i a_i with a_0 = 1.
class MonicPoly {
 public:
  MonicPoly() = default;

  static MonicPoly from_coefficients(std::vector<Rational> a) {
    if (a.size() < 2) throw domain_error("a monic polynomial needs degree d >= 1");
    if (a[0] != 1) throw domain_error("leading coefficient a_0 must be 1 (monic input only)");
    return MonicPoly(std::move(a));
  }

  // From ordinary coefficients c_0 x^d + c_1 x^{d-1} + ... + c_d with c_0 = 1.
  static MonicPoly from_monomial(const std::vector<Rational>& c) {
    std::vector<Rational> a(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) a[i] = (i % 2 == 0) ? c[i] : Rational(-c[i]);
    return from_coefficients(std::move(a));
  }

  int degree() const { return static_cast<int>(a_.size()) - 1; }
  const Rational& a(int i) const { return a_.at(static_cast<std::size_t>(i)); }
  const std::vector<Rational>& coefficients() const { return a_; }

  // c_i, the coefficient of x^{d-i}.
  std::vector<Rational> monomial_coefficients() const {
    std::vector<Rational> c(a_.size());
    for (std::size_t i = 0; i < a_.size(); ++i) c[i] = (i % 2 == 0) ? a_[i] : Rational(-a_[i]);
    return c;
  }

  // "x^3 - 6x^2 + 11x - 6" style.
  std::string to_string() const {
    const auto c = monomial_coefficients();
    const int d = degree();
    std::string out;
    for (int i = 0; i <= d; ++i) {
      const Rational& v = c[static_cast<std::size_t>(i)];
      if (v == 0) continue;
      const int e = d - i;
      Rational mag = abs(v);
      if (out.empty()) {
        if (v < 0) out += "-";
      } else {
        out += v < 0 ? " - " : " + ";
      }
      if (e == 0) {
        out += mag.get_str();
      } else {
        if (mag != 1) out += mag.get_den() == 1 ? mag.get_str() : "(" + mag.get_str() + ")";
        out += "x";
        if (e > 1) out += "^" + std::to_string(e);
      }
    }
    return out.empty() ? "0" : out;
  }

  bool operator==(const MonicPoly& other) const { return a_ == other.a_; }

 private:
  explicit MonicPoly(std::vector<Rational> a) : a_(std::move(a)) {}
  std::vector<Rational> a_;
};

// m_1..m_N of the empirical root distribution of a degree-d polynomial.
struct MomentVector {
  int d = 0;
  Sequence m;
  const Rational& operator[](int n) const { return m.at(static_cast<std::size_t>(n - 1)); }
  int size() const { return static_cast<int>(m.size()); }
};

// kappa_1..kappa_d.
struct CumulantVector {
  int d = 0;
  Sequence k;
  const Rational& operator[](int n) const { return k.at(static_cast<std::size_t>(n - 1)); }
  int size() const { return static_cast<int>(k.size()); }
};

inline MonicPoly from_roots(const std::vector<Rational>& roots) {
  if (roots.empty()) throw domain_error("from_roots needs at least one root");
  std::vector<Rational> e(roots.size() + 1, Rational(0));
  e[0] = 1;
  for (std::size_t r = 0; r < roots.size(); ++r) {
    for (std::size_t k = r + 1; k >= 1; --k) e[k] += e[k - 1] * roots[r];
  }
  return MonicPoly::from_coefficients(std::move(e));
}

// Newton's identities with e_i = a_i, and e_i = 0 beyond the degree.
inline MomentVector moments(const MonicPoly& p, int upto) {
  if (upto < 1) throw domain_error("moments needs upto >= 1");
  const int d = p.degree();
  std::vector<Rational> power_sum(static_cast<std::size_t>(upto + 1));
  for (int k = 1; k <= upto; ++k) {
    Rational s = 0;
    for (int i = 1; i < k && i <= d; ++i) {
      Rational term = p.a(i) * power_sum[static_cast<std::size_t>(k - i)];
      if (i % 2 == 1) s += term; else s -= term;
    }
    if (k <= d) {
      Rational term = p.a(k) * k;
      if (k % 2 == 1) s += term; else s -= term;
    }
    power_sum[static_cast<std::size_t>(k)] = s;
  }
  MomentVector out{d, {}};
  for (int k = 1; k <= upto; ++k) out.m.push_back(power_sum[static_cast<std::size_t>(k)] / d);
  return out;
}

namespace detail {

// The two coefficient/cumulant sums depend on pi only through its type, so
// they are evaluated per type with multiplicity n!/prod((i!)^{s_i} s_i!).
inline void check_cumulant_order(int n, const Limits& limits) {
  check_cap(n, limits.cumulant_order, "cumulant order n");
}

}  // namespace detail

// kappa^d_1..kappa^d_upto; upto defaults to d.
inline CumulantVector cumulants(const MonicPoly& p, int upto, const Limits& limits = default_limits()) {
  const int d = p.degree();
  if (upto < 1 || upto > d) throw domain_error("cumulants are defined for 1 <= n <= d");
  detail::check_cumulant_order(upto, limits);
  // f_i = i! a_i / (d)_i, the per-block factor of N!_pi a_pi / (d)_pi.
  std::vector<Rational> f(static_cast<std::size_t>(upto + 1));
  for (int i = 1; i <= upto; ++i) {
    f[static_cast<std::size_t>(i)] = Rational(factorial(static_cast<unsigned long>(i))) * p.a(i) /
                                     falling_factorial(Rational(d), static_cast<unsigned long>(i));
  }
  const Sequence block_factor(f.begin() + 1, f.end());
  CumulantVector out{d, {}};
  for (int n = 1; n <= upto; ++n) {
    Rational sum = 0;
    for (const auto& t : partition_types(n)) {
      Rational term = type_weight(block_factor, t);
      const int b = t.block_count();
      term *= Rational(set_partitions_of_type(t) * factorial(static_cast<unsigned long>(b - 1)));
      if (b % 2 == 1) sum -= term; else sum += term;
    }
    Rational scale = power(Rational(-d), n) / (Rational(d) * Rational(factorial(static_cast<unsigned long>(n - 1))));
    out.k.push_back(scale * sum);
  }
  return out;
}

inline CumulantVector cumulants(const MonicPoly& p, const Limits& limits = default_limits()) {
  return cumulants(p, p.degree(), limits);
}

inline MonicPoly poly_from_cumulants(int d, const Sequence& kappa, const Limits& limits = default_limits()) {
  if (d < 1) throw domain_error("degree must be >= 1");
  if (static_cast<int>(kappa.size()) < d) throw domain_error("poly_from_cumulants needs at least d cumulants");
  detail::check_cumulant_order(d, limits);
  std::vector<Rational> a(static_cast<std::size_t>(d + 1));
  a[0] = 1;
  for (int n = 1; n <= d; ++n) {
    Rational sum = 0;
    for (const auto& t : partition_types(n)) {
      sum += Rational(set_partitions_of_type(t) * mobius_zero(t)) * power(Rational(d), t.block_count()) *
             type_weight(kappa, t);
    }
    a[static_cast<std::size_t>(n)] = falling_factorial(Rational(d), static_cast<unsigned long>(n)) /
                                     (power(Rational(d), n) * Rational(factorial(static_cast<unsigned long>(n)))) * sum;
  }
  return MonicPoly::from_coefficients(std::move(a));
}

inline MonicPoly poly_from_cumulants(int d, const CumulantVector& kappa, const Limits& limits = default_limits()) {
  return poly_from_cumulants(d, kappa.k, limits);
}

inline void require_same_degree(const MonicPoly& p, const MonicPoly& q, const char* op) {
  if (p.degree() != q.degree()) {
    throw dimension_error(std::string(op) + ": degrees " + std::to_string(p.degree()) + " and " +
                          std::to_string(q.degree()) + " differ");
  }
}

inline MonicPoly boxplus(const MonicPoly& p, const MonicPoly& q) {
  require_same_degree(p, q, "boxplus");
  const int d = p.degree();
  std::vector<Rational> ff(static_cast<std::size_t>(d + 1));
  for (int i = 0; i <= d; ++i) ff[static_cast<std::size_t>(i)] = falling_factorial(Rational(d), static_cast<unsigned long>(i));
  std::vector<Rational> a(static_cast<std::size_t>(d + 1));
  for (int k = 0; k <= d; ++k) {
    Rational s = 0;
    for (int i = 0; i <= k; ++i) {
      s += p.a(i) * q.a(k - i) / (ff[static_cast<std::size_t>(i)] * ff[static_cast<std::size_t>(k - i)]);
    }
    a[static_cast<std::size_t>(k)] = s * ff[static_cast<std::size_t>(k)];
  }
  return MonicPoly::from_coefficients(std::move(a));
}

inline MonicPoly boxtimes(const MonicPoly& p, const MonicPoly& q) {
  require_same_degree(p, q, "boxtimes");
  const int d = p.degree();
  std::vector<Rational> a(static_cast<std::size_t>(d + 1));
  for (int k = 0; k <= d; ++k) {
    a[static_cast<std::size_t>(k)] = p.a(k) * q.a(k) * Rational(factorial(static_cast<unsigned long>(k))) /
                                     falling_factorial(Rational(d), static_cast<unsigned long>(k));
  }
  return MonicPoly::from_coefficients(std::move(a));
}

// x^j D^j p(x) / (d)_j.
inline MonicPoly derivative_shift(const MonicPoly& p, int j) {
  const int d = p.degree();
  if (j < 0 || j > d) throw domain_error("derivative_shift needs 0 <= j <= d");
  const Rational dj = falling_factorial(Rational(d), static_cast<unsigned long>(j));
  std::vector<Rational> a(static_cast<std::size_t>(d + 1));
  for (int i = 0; i <= d; ++i) {
    a[static_cast<std::size_t>(i)] = p.a(i) * falling_factorial(Rational(d - i), static_cast<unsigned long>(j)) / dj;
  }
  return MonicPoly::from_coefficients(std::move(a));
}

// Roots multiplied by c: a_i -> c^i a_i.
inline MonicPoly dilate(const MonicPoly& p, const Rational& c) {
  std::vector<Rational> a = p.coefficients();
  Rational scale = 1;
  for (std::size_t i = 1; i < a.size(); ++i) {
    scale *= c;
    a[i] *= scale;
  }
  return MonicPoly::from_coefficients(std::move(a));
}

// JSON forms: {"d": 3, "a": ["1","-6",...]} on output; {"roots": [...]} or {"a": [...]} on input.
inline nlohmann::ordered_json to_json(const MonicPoly& p) {
  nlohmann::ordered_json j;
  j["d"] = p.degree();
  j["a"] = to_strings(p.coefficients());
  j["monomial"] = to_strings(p.monomial_coefficients());
  j["text"] = p.to_string();
  return j;
}

inline std::vector<Rational> json_rationals(const nlohmann::json& arr, const char* what) {
  if (!arr.is_array()) throw parse_error(std::string(what) + " must be an array of \"num/den\" strings");
  std::vector<Rational> out;
  for (const auto& v : arr) {
    if (v.is_string()) {
      out.push_back(parse_rational(v.get<std::string>()));
    } else if (v.is_number_integer()) {
      out.push_back(Rational(Integer(std::to_string(v.get<long long>()), 10)));
    } else {
      throw parse_error(std::string(what) + " entries must be integers or \"num/den\" strings (no floats)");
    }
  }
  return out;
}

inline MonicPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw parse_error("polynomial JSON must be an object");
  const bool has_roots = j.contains("roots");
  const bool has_a = j.contains("a");
  if (has_roots == has_a) throw parse_error("polynomial JSON needs exactly one of \"roots\" or \"a\"");
  MonicPoly p = has_roots ? from_roots(json_rationals(j["roots"], "roots"))
                          : MonicPoly::from_coefficients(json_rationals(j["a"], "a"));
  if (j.contains("d") && j["d"].get<int>() != p.degree()) {
    throw parse_error("polynomial JSON: \"d\" disagrees with the coefficient count");
  }
  return p;
}

}  // namespace ffp
