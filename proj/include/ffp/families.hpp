#pragma once

#include <string>
#include <vector>

#include "ffp/errors.hpp"
#include "ffp/ffpoly.hpp"
#include "ffp/rational.hpp"

namespace ffp {

// Rescaled Hermite: a_{2k} = (-1)^k (d)_{2k} / (k! 2^k d^k), odd a vanish.
inline MonicPoly hermite(int d) {
  if (d < 1) throw domain_error("hermite needs d >= 1");
  std::vector<Rational> a(static_cast<std::size_t>(d + 1), Rational(0));
  for (int k = 0; 2 * k <= d; ++k) {
    Rational v = falling_factorial(Rational(d), static_cast<unsigned long>(2 * k)) /
                 (Rational(factorial(static_cast<unsigned long>(k))) * power(Rational(2 * d), k));
    a[static_cast<std::size_t>(2 * k)] = (k % 2 == 0) ? v : Rational(-v);
  }
  return MonicPoly::from_coefficients(std::move(a));
}

// d^{-d/2} H_d(sqrt(d) x) expanded from the classical sum
// H_d(x) = sum_k (-1)^k (d)_{2k} / (k! 2^k) x^{d-2k}. The half-integer powers of d
// cancel term by term, leaving d^{-k} on x^{d-2k}.
inline MonicPoly hermite_from_classical(int d) {
  if (d < 1) throw domain_error("hermite needs d >= 1");
  std::vector<Rational> c(static_cast<std::size_t>(d + 1), Rational(0));
  for (int k = 0; 2 * k <= d; ++k) {
    Rational classical = falling_factorial(Rational(d), static_cast<unsigned long>(2 * k)) /
                         (Rational(factorial(static_cast<unsigned long>(k))) * power(Rational(2), k));
    if (k % 2 == 1) classical = -classical;
    // x^{d-2k} picks up sqrt(d)^{d-2k} from the substitution and d^{-d/2} from the prefactor.
    const int sqrt_exponent = (d - 2 * k) - d;
    c[static_cast<std::size_t>(2 * k)] = classical * power(Rational(d), sqrt_exponent / 2);
  }
  return MonicPoly::from_monomial(c);
}

// Rescaled Laguerre: a_k = (d)_k (d lambda)_k / (d^k k!).
inline MonicPoly laguerre(int d, const Rational& lambda) {
  if (d < 1) throw domain_error("laguerre needs d >= 1");
  std::vector<Rational> a(static_cast<std::size_t>(d + 1));
  for (int k = 0; k <= d; ++k) {
    a[static_cast<std::size_t>(k)] = falling_factorial(Rational(d), static_cast<unsigned long>(k)) *
                                     falling_factorial(Rational(d) * lambda, static_cast<unsigned long>(k)) /
                                     (power(Rational(d), k) * Rational(factorial(static_cast<unsigned long>(k))));
  }
  return MonicPoly::from_coefficients(std::move(a));
}

// (x - a)^d.
inline MonicPoly power_family(int d, const Rational& root) {
  if (d < 1) throw domain_error("power family needs d >= 1");
  std::vector<Rational> a(static_cast<std::size_t>(d + 1));
  for (int k = 0; k <= d; ++k) {
    a[static_cast<std::size_t>(k)] = Rational(binomial(static_cast<unsigned long>(d), static_cast<unsigned long>(k))) * power(root, k);
  }
  return MonicPoly::from_coefficients(std::move(a));
}

// The unit Laguerre polynomial; every finite free cumulant equals 1.
inline MonicPoly compound_poisson_witness(int d) { return laguerre(d, Rational(1)); }

enum class FamilyKind { power, hermite, laguerre };

struct FamilySpec {
  FamilyKind kind = FamilyKind::hermite;
  Rational parameter = 0;  // the root a for power, lambda for laguerre

  static FamilySpec power(const Rational& a) { return {FamilyKind::power, a}; }
  static FamilySpec hermite() { return {FamilyKind::hermite, 0}; }
  static FamilySpec laguerre(const Rational& lambda) {
    if (lambda <= 0) throw domain_error("laguerre lambda must be positive");
    return {FamilyKind::laguerre, lambda};
  }

  static FamilySpec parse(const std::string& name, const Rational& a, const Rational& lambda) {
    if (name == "power") return power(a);
    if (name == "hermite") return hermite();
    if (name == "laguerre") return laguerre(lambda);
    throw parse_error("unknown family '" + name + "' (expected power, hermite or laguerre)");
  }

  MonicPoly build(int d) const {
    switch (kind) {
      case FamilyKind::power: return power_family(d, parameter);
      case FamilyKind::hermite: return ffp::hermite(d);
      case FamilyKind::laguerre: return ffp::laguerre(d, parameter);
    }
    throw invariant_error("unhandled family kind");
  }

  // kappa_1..kappa_n; the same values serve every degree d >= n and the free limit.
  Sequence cumulant_profile(int n) const {
    Sequence k(static_cast<std::size_t>(n), Rational(0));
    switch (kind) {
      case FamilyKind::power:
        if (n >= 1) k[0] = parameter;
        break;
      case FamilyKind::hermite:
        if (n >= 2) k[1] = 1;
        break;
      case FamilyKind::laguerre:
        for (auto& v : k) v = parameter;
        break;
    }
    return k;
  }

  std::string name() const {
    switch (kind) {
      case FamilyKind::power: return "power";
      case FamilyKind::hermite: return "hermite";
      case FamilyKind::laguerre: return "laguerre";
    }
    return "?";
  }

  std::string to_string() const {
    switch (kind) {
      case FamilyKind::power: return "power(a=" + parameter.get_str() + ")";
      case FamilyKind::hermite: return "hermite";
      case FamilyKind::laguerre: return "laguerre(lambda=" + parameter.get_str() + ")";
    }
    return "?";
  }
};

}  // namespace ffp
