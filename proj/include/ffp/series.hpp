#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ffp/errors.hpp"
#include "ffp/rational.hpp"

namespace ffp {

// c_0 + c_1 x + ... + c_N x^N + O(x^{N+1}). Every operation states how far its
// result is known; reading past that raises truncation_error.
class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw truncation_error("power series needs at least the constant term");
  }

  static PowerSeries zero(int order) { return PowerSeries(std::vector<Rational>(static_cast<std::size_t>(order + 1), Rational(0))); }
  static PowerSeries constant(const Rational& c, int order) {
    PowerSeries out = zero(order);
    out.c_[0] = c;
    return out;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }

  const Rational& operator[](int i) const {
    if (i < 0 || i > order()) {
      throw truncation_error("coefficient " + std::to_string(i) + " requested from a series known to order " +
                             std::to_string(order()));
    }
    return c_[static_cast<std::size_t>(i)];
  }
  Rational& at(int i) { return c_.at(static_cast<std::size_t>(i)); }

  PowerSeries truncated(int order) const {
    if (order > this->order()) {
      throw truncation_error("cannot extend a series known to order " + std::to_string(this->order()) + " to order " +
                             std::to_string(order));
    }
    return PowerSeries(std::vector<Rational>(c_.begin(), c_.begin() + order + 1));
  }

  bool operator==(const PowerSeries& other) const { return c_ == other.c_; }

 private:
  std::vector<Rational> c_;
};

inline PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Rational> c(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = a[i] + b[i];
  return PowerSeries(std::move(c));
}

inline PowerSeries operator*(const Rational& s, const PowerSeries& a) {
  std::vector<Rational> c = a.coefficients();
  for (auto& v : c) v *= s;
  return PowerSeries(std::move(c));
}

inline PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + Rational(-1) * b; }

inline PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Rational> c(static_cast<std::size_t>(n + 1), Rational(0));
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) c[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  }
  return PowerSeries(std::move(c));
}

// 1/a; requires a nonzero constant term.
inline PowerSeries inverse(const PowerSeries& a) {
  if (a[0] == 0) throw domain_error("power series inverse needs a nonzero constant term");
  const int n = a.order();
  std::vector<Rational> b(static_cast<std::size_t>(n + 1), Rational(0));
  b[0] = Rational(1) / a[0];
  for (int k = 1; k <= n; ++k) {
    Rational s = 0;
    for (int i = 1; i <= k; ++i) s += a[i] * b[static_cast<std::size_t>(k - i)];
    b[static_cast<std::size_t>(k)] = -s * b[0];
  }
  return PowerSeries(std::move(b));
}

inline PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) { return a * inverse(b); }

// f(g(x)); g must have zero constant term. Known to min(order f, order g).
inline PowerSeries compose(const PowerSeries& f, const PowerSeries& g) {
  if (g[0] != 0) throw domain_error("compose needs an inner series without constant term");
  const int n = std::min(f.order(), g.order());
  const PowerSeries inner = g.truncated(n);
  PowerSeries out = PowerSeries::constant(f[n], n);
  for (int i = n - 1; i >= 0; --i) out = out * inner + PowerSeries::constant(f[i], n);
  return out;
}

// h with f(h(x)) = x; needs f_0 = 0 and f_1 != 0. Known to the order of f.
inline PowerSeries revert(const PowerSeries& f) {
  if (f.order() < 1 || f[0] != 0 || f[1] == 0) throw domain_error("revert needs f_0 = 0 and f_1 != 0");
  const int n = f.order();
  PowerSeries h = PowerSeries::zero(n);
  h.at(1) = Rational(1) / f[1];
  for (int m = 2; m <= n; ++m) {
    // With h fixed below order m, the x^m coefficient of f(h) is f_1 h_m + (terms already known).
    const Rational residual = compose(f.truncated(m), h.truncated(m))[m];
    h.at(m) = -residual / f[1];
  }
  return h;
}

// Known to one order less than the input.
inline PowerSeries derivative(const PowerSeries& a) {
  if (a.order() < 1) throw truncation_error("derivative of a series known only to order 0");
  std::vector<Rational> c(static_cast<std::size_t>(a.order()));
  for (int i = 1; i <= a.order(); ++i) c[static_cast<std::size_t>(i - 1)] = a[i] * i;
  return PowerSeries(std::move(c));
}

// Antiderivative with zero constant term; known to one order more than the input.
inline PowerSeries integrate(const PowerSeries& a) {
  std::vector<Rational> c(static_cast<std::size_t>(a.order() + 2), Rational(0));
  for (int i = 0; i <= a.order(); ++i) c[static_cast<std::size_t>(i + 1)] = a[i] / (i + 1);
  return PowerSeries(std::move(c));
}

// log a for a_0 = 1, as the integral of a'/a.
inline PowerSeries log(const PowerSeries& a) {
  if (a[0] != 1) throw domain_error("series log needs constant term 1");
  if (a.order() == 0) return PowerSeries::zero(0);
  return integrate(derivative(a) / a.truncated(a.order() - 1));
}

// x^v (c_0 + c_1 x + ... + c_N x^N + O(x^{N+1})). The variable is whatever the
// caller means (z, or w = 1/z for Cauchy transforms).
class LaurentSeries {
 public:
  LaurentSeries() = default;
  LaurentSeries(int valuation, PowerSeries body) : v_(valuation), body_(std::move(body)) {}

  int valuation() const { return v_; }
  const PowerSeries& body() const { return body_; }
  // Largest exponent whose coefficient is known.
  int precision() const { return v_ + body_.order(); }

  Rational coefficient(int exponent) const {
    if (exponent < v_) return 0;
    if (exponent > precision()) {
      throw truncation_error("coefficient of x^" + std::to_string(exponent) + " requested; series known through x^" +
                             std::to_string(precision()));
    }
    return body_[exponent - v_];
  }

  // Drops leading zero coefficients; an all-zero body cannot be normalized.
  LaurentSeries normalized() const {
    int lead = 0;
    while (lead <= body_.order() && body_[lead] == 0) ++lead;
    if (lead > body_.order()) throw truncation_error("series vanishes to its known precision; leading term unknown");
    std::vector<Rational> c(body_.coefficients().begin() + lead, body_.coefficients().end());
    return LaurentSeries(v_ + lead, PowerSeries(std::move(c)));
  }

  // Re-expresses with a smaller valuation (padding with exact zeros).
  LaurentSeries with_valuation(int v) const {
    if (v > v_) throw domain_error("with_valuation can only lower the valuation");
    std::vector<Rational> c(static_cast<std::size_t>(v_ - v), Rational(0));
    c.insert(c.end(), body_.coefficients().begin(), body_.coefficients().end());
    return LaurentSeries(v, PowerSeries(std::move(c)));
  }

  // Returns the series as an ordinary power series; needs valuation >= 0.
  PowerSeries as_power_series() const {
    if (v_ < 0) throw domain_error("series has negative valuation");
    return with_valuation(0).body();
  }

  LaurentSeries shifted(int k) const { return LaurentSeries(v_ + k, body_); }

 private:
  int v_ = 0;
  PowerSeries body_;
};

inline LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  const int v = std::min(a.valuation(), b.valuation());
  const int precision = std::min(a.precision(), b.precision());
  if (precision < v) throw truncation_error("sum of series has no known coefficients");
  std::vector<Rational> c(static_cast<std::size_t>(precision - v + 1));
  for (int e = v; e <= precision; ++e) c[static_cast<std::size_t>(e - v)] = a.coefficient(e) + b.coefficient(e);
  return LaurentSeries(v, PowerSeries(std::move(c)));
}

inline LaurentSeries operator*(const Rational& s, const LaurentSeries& a) {
  return LaurentSeries(a.valuation(), s * a.body());
}

inline LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + Rational(-1) * b; }

// Exponent of the first nonzero known coefficient, or precision() + 1 if none.
inline int leading_exponent(const LaurentSeries& a) {
  int e = a.valuation();
  while (e <= a.precision() && a.coefficient(e) == 0) ++e;
  return e;
}

// Precision follows the true leading terms, so exact leading zeros cost nothing.
inline LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  const int ea = leading_exponent(a), eb = leading_exponent(b);
  const int v = a.valuation() + b.valuation();
  const int precision = std::min(ea + b.precision(), eb + a.precision());
  std::vector<Rational> c(static_cast<std::size_t>(precision - v + 1), Rational(0));
  for (int e = ea + eb; e <= precision; ++e) {
    Rational sum = 0;
    for (int i = ea; i <= std::min(a.precision(), e - eb); ++i) sum += a.coefficient(i) * b.coefficient(e - i);
    c[static_cast<std::size_t>(e - v)] = sum;
  }
  return LaurentSeries(v, PowerSeries(std::move(c)));
}

inline LaurentSeries inverse(const LaurentSeries& a) {
  const LaurentSeries n = a.normalized();
  return LaurentSeries(-n.valuation(), inverse(n.body()));
}

inline LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) { return a * inverse(b); }

inline LaurentSeries monomial(int exponent, const Rational& c, int precision) {
  if (precision < exponent) throw truncation_error("monomial precision below its exponent");
  PowerSeries body = PowerSeries::zero(precision - exponent);
  body.at(0) = c;
  return LaurentSeries(exponent, std::move(body));
}

// d/dx term by term; keeps the relative order (one fewer known exponent).
inline LaurentSeries derivative(const LaurentSeries& a) {
  std::vector<Rational> c = a.body().coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] *= a.valuation() + static_cast<int>(i);
  return LaurentSeries(a.valuation() - 1, PowerSeries(std::move(c)));
}

// d/dz of a series in w = 1/z: c w^k -> -k c w^{k+1}.
inline LaurentSeries derivative_in_z(const LaurentSeries& a) {
  return Rational(-1) * derivative(a).shifted(2);
}

// Truncated series in two variables: coefficients c[i][j] of x^i y^j for i + j <= T.
class BivariateSeries {
 public:
  BivariateSeries() = default;
  explicit BivariateSeries(int total_order)
      : t_(total_order), c_(static_cast<std::size_t>(total_order + 1), std::vector<Rational>(static_cast<std::size_t>(total_order + 1), Rational(0))) {}

  int total_order() const { return t_; }

  const Rational& operator()(int i, int j) const {
    if (i < 0 || j < 0 || i + j > t_) throw truncation_error("bivariate coefficient outside the known total order");
    return c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  Rational& at(int i, int j) {
    if (i < 0 || j < 0 || i + j > t_) throw truncation_error("bivariate coefficient outside the known total order");
    return c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  bool operator==(const BivariateSeries& other) const { return t_ == other.t_ && c_ == other.c_; }

 private:
  int t_ = 0;
  std::vector<std::vector<Rational>> c_;
};

inline BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  const int t = std::min(a.total_order(), b.total_order());
  BivariateSeries out(t);
  for (int i1 = 0; i1 <= t; ++i1) {
    for (int j1 = 0; i1 + j1 <= t; ++j1) {
      const Rational& x = a(i1, j1);
      if (x == 0) continue;
      for (int i2 = 0; i1 + j1 + i2 <= t; ++i2) {
        for (int j2 = 0; i1 + j1 + i2 + j2 <= t; ++j2) out.at(i1 + i2, j1 + j2) += x * b(i2, j2);
      }
    }
  }
  return out;
}

// log a for a(0,0) = 1 via log(1 + q) = sum_k (-1)^{k+1} q^k / k; q^k has
// minimal total degree k, so the sum stops at the total order.
inline BivariateSeries log(const BivariateSeries& a) {
  if (a(0, 0) != 1) throw domain_error("bivariate log needs constant term 1");
  const int t = a.total_order();
  BivariateSeries q = a;
  q.at(0, 0) = 0;
  BivariateSeries out(t);
  BivariateSeries power = q;
  for (int k = 1; k <= t; ++k) {
    const Rational scale = ratio(k % 2 == 1 ? 1 : -1, k);
    for (int i = 0; i <= t; ++i) {
      for (int j = 0; i + j <= t; ++j) out.at(i, j) += scale * power(i, j);
    }
    power = power * q;
  }
  return out;
}

}  // namespace ffp
