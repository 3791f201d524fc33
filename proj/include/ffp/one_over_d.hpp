#pragma once

#include <string>
#include <vector>

#include "ffp/rational.hpp"

namespace ffp {

// sum_j c_j (1/d)^j with exact rational coefficients.
class OneOverDPoly {
 public:
  OneOverDPoly() = default;
  explicit OneOverDPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  // Coefficient of (1/d)^j; zero beyond the stored degree.
  Rational coefficient(int j) const {
    return (j >= 0 && j < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(j)] : Rational(0);
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }

  Rational evaluate(const Rational& d) const {
    Rational x = Rational(1) / d;
    Rational out = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * x + *it;
    return out;
  }

  // "5 - 22/d + 32/d^2 - 15/d^3"; fractional coefficients are parenthesized.
  std::string to_string() const {
    std::string out;
    for (std::size_t j = 0; j < c_.size(); ++j) {
      const Rational& v = c_[j];
      if (v == 0) continue;
      Rational mag = abs(v);
      if (out.empty()) {
        if (v < 0) out += "-";
      } else {
        out += v < 0 ? " - " : " + ";
      }
      if (j == 0) {
        out += mag.get_str();
        continue;
      }
      out += mag.get_den() == 1 ? mag.get_str() : "(" + mag.get_str() + ")";
      out += "/d";
      if (j > 1) out += "^" + std::to_string(j);
    }
    return out.empty() ? "0" : out;
  }

  bool operator==(const OneOverDPoly& other) const { return c_ == other.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

}  // namespace ffp
