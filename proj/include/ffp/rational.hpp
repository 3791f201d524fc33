#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "ffp/errors.hpp"

namespace ffp {

using Rational = mpq_class;
using Integer = mpz_class;

// A 1-based weight sequence u_1, u_2, ... stored with u_j at index j-1.
using Sequence = std::vector<Rational>;

// Parses "num", "-num" or "num/den" into canonical form. Floats are rejected.
inline Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_int(num, true) || (slash != std::string_view::npos && !valid_int(den, false))) {
    throw parse_error("malformed rational '" + std::string(text) + "' (expected num or num/den)");
  }
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  Integer numerator(n, 10);
  Integer denominator = 1;
  if (slash != std::string_view::npos) denominator = Integer(std::string(den), 10);
  if (denominator == 0) throw parse_error("rational '" + std::string(text) + "' has zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

// a/b in canonical form (the two-argument mpq_class constructor does not reduce).
inline Rational ratio(long a, long b) {
  if (b == 0) throw domain_error("zero denominator");
  Rational q(a, 1);
  q /= b;
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// x (x-1) ... (x-k+1); the empty product is 1.
inline Rational falling_factorial(const Rational& x, unsigned long k) {
  Rational out = 1;
  for (unsigned long i = 0; i < k; ++i) out *= x - Rational(static_cast<long>(i));
  return out;
}

inline Rational power(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw domain_error("negative power of zero");
    return power(Rational(1) / base, -exponent);
  }
  Rational out = 1;
  for (long i = 0; i < exponent; ++i) out *= base;
  return out;
}

inline Rational sign_power(long exponent) { return (exponent % 2 == 0) ? Rational(1) : Rational(-1); }

inline std::vector<std::string> to_strings(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

inline std::vector<Rational> parse_rationals(const std::vector<std::string>& texts) {
  std::vector<Rational> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_rational(t));
  return out;
}

}  // namespace ffp
