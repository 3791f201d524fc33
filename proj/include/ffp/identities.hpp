#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

#include "ffp/config.hpp"
#include "ffp/families.hpp"
#include "ffp/ffpoly.hpp"
#include "ffp/one_over_d.hpp"
#include "ffp/pair_sums.hpp"
#include "ffp/partitions.hpp"
#include "ffp/permutations.hpp"
#include "ffp/rational.hpp"

namespace ffp {

namespace detail {

inline void require_length(const Sequence& s, int n, const char* what) {
  if (static_cast<int>(s.size()) < n) {
    throw domain_error(std::string(what) + " has " + std::to_string(s.size()) + " entries; order " +
                       std::to_string(n) + " needs at least " + std::to_string(n));
  }
}

inline Rational moment_prefactor(int n) {
  return sign_power(n - 1) / Rational(factorial(static_cast<unsigned long>(n - 1)));
}

// Collapses the layered pair sum at a concrete d: layer j carries d^{-j}.
inline Rational at_degree(const std::vector<Rational>& layers, int n, int d) {
  Rational out = 0;
  const Rational inv = ratio(1, d);
  Rational scale = 1;
  for (const auto& layer : layers) {
    out += layer * scale;
    scale *= inv;
  }
  return moment_prefactor(n) * out;
}

inline PartitionType type_of_image(const std::vector<int>& image) {
  const std::size_t n = image.size();
  std::vector<int> counts(n, 0);
  std::vector<char> seen(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(image[x] - 1)) {
      seen[x] = 1;
      ++len;
    }
    ++counts[static_cast<std::size_t>(len - 1)];
  }
  return PartitionType(std::move(counts));
}

}  // namespace detail

// Cumulant product formula: kappa_n(p boxtimes_d q) from the cumulants of p and q.
inline Rational product_cumulant_rhs(int n, int d, const Sequence& kp, const Sequence& kq,
                                     const Limits& limits = default_limits()) {
  detail::require_length(kp, n, "cumulants of p");
  detail::require_length(kq, n, "cumulants of q");
  return detail::at_degree(join_pair_layers(n, kp, kq, limits), n, d);
}

// Moment product formula: m_n(p boxtimes_d q) from kappa(p) and m(q).
inline Rational product_moment_rhs(int n, int d, const Sequence& kp, const Sequence& mq,
                                   const Limits& limits = default_limits()) {
  detail::require_length(kp, n, "cumulants of p");
  detail::require_length(mq, n, "moments of q");
  return detail::at_degree(join_pair_layers(n, kp, mq, limits), n, d);
}

// m_n of the degree-d polynomial with cumulants k, from the double partition sum.
inline Rational moment_cumulant_eval(int n, int d, const Sequence& k, const Limits& limits = default_limits()) {
  detail::require_length(k, n, "cumulants");
  const Sequence ones(static_cast<std::size_t>(n), Rational(1));
  return detail::at_degree(join_pair_layers(n, ones, k, limits), n, d);
}

// (-1)^{n-1}/(n-1)! times the joined-pair sum restricted to |sigma| + |tau| = n + 1 - k.
inline Rational genus_lhs(int n, int k, const Sequence& u, const Sequence& v, const Limits& limits = default_limits()) {
  if (k < 0 || k > n - 1) throw domain_error("genus_lhs needs 0 <= k <= n-1");
  detail::require_length(u, n, "weights u");
  detail::require_length(v, n, "weights v");
  return detail::moment_prefactor(n) * join_pair_layers(n, u, v, limits)[static_cast<std::size_t>(k)];
}

// m_n as an exact polynomial in 1/d for a d-independent cumulant profile.
inline OneOverDPoly order_d_expansion(int n, const Sequence& k, const Limits& limits = default_limits()) {
  detail::require_length(k, n, "cumulants");
  const Sequence ones(static_cast<std::size_t>(n), Rational(1));
  std::vector<Rational> layers = join_pair_layers(n, ones, k, limits);
  for (auto& layer : layers) layer *= detail::moment_prefactor(n);
  return OneOverDPoly(std::move(layers));
}

struct CompoundPoissonResult {
  bool passed = true;
  int first_failure = 0;  // order n of the first mismatch
  Sequence moments;
  Sequence cumulants_of_product;
};

// Compound Poisson check: m_n(p) = kappa_n(p boxtimes_d L) with L the unit Laguerre polynomial.
inline CompoundPoissonResult compound_poisson_check(const MonicPoly& p, const Limits& limits = default_limits()) {
  const int d = p.degree();
  CompoundPoissonResult out;
  out.moments = moments(p, d).m;
  out.cumulants_of_product = cumulants(boxtimes(p, compound_poisson_witness(d)), limits).k;
  for (int n = 1; n <= d; ++n) {
    if (out.moments[static_cast<std::size_t>(n - 1)] != out.cumulants_of_product[static_cast<std::size_t>(n - 1)]) {
      out.passed = false;
      out.first_failure = n;
      break;
    }
  }
  return out;
}

// Census of one S_n sweep relative to gamma_zeta, keyed by (genus, type alpha, type alpha^{-1} gamma).
struct GenusCensus {
  std::vector<PartitionType> types;
  std::map<std::tuple<int, std::size_t, std::size_t>, std::uint64_t> counts;
};

inline const GenusCensus& genus_census(const CycleType& zeta, const Limits& limits = default_limits()) {
  static std::map<std::vector<int>, std::unique_ptr<GenusCensus>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(zeta.parts());
  if (it != cache.end()) return *it->second;
  auto census = std::make_unique<GenusCensus>();
  census->types = partition_types(zeta.n());
  for_each_transitive(canonical_gamma(zeta), [&](const std::vector<int>& alpha, const std::vector<int>& kr, int g) {
    ++census->counts[{g, type_index(census->types, detail::type_of_image(alpha)),
                      type_index(census->types, detail::type_of_image(kr))}];
  }, -1, limits);
  return *cache.emplace(zeta.parts(), std::move(census)).first->second;
}

struct GenusLayer {
  int n = 0;
  int k = 0;
  int g = 0;
  Rational value;
};

// s_k^{(g)}: sum over zeta |- n with |zeta| = k + 1 - 2g of
// n / (prod zeta_i prod t_i!) * sum over S_NC^{(g)}[zeta] of u_alpha v_{alpha^{-1} gamma_zeta}.
inline GenusLayer genus_layer(int n, int k, int g, const Sequence& u, const Sequence& v,
                              const Limits& limits = default_limits()) {
  if (n < 1) throw domain_error("genus_layer needs n >= 1");
  if (k < 0 || k > n - 1) throw domain_error("genus_layer needs 0 <= k <= n-1");
  if (g < 0 || 2 * g > k) throw domain_error("genus_layer needs 0 <= g <= floor(k/2)");
  check_cap(n, k >= 2 ? limits.genus_high_k : limits.genus_low_k, k >= 2 ? "genus sweep size n (k >= 2)" : "genus sweep size n (k <= 1)");
  detail::require_length(u, n, "weights u");
  detail::require_length(v, n, "weights v");
  const int parts = k + 1 - 2 * g;
  Rational total = 0;
  for (const auto& zeta : cycle_types(n)) {
    if (zeta.part_count() != parts) continue;
    const GenusCensus& census = genus_census(zeta, limits);
    Rational inner = 0;
    for (const auto& [key, count] : census.counts) {
      const auto& [genus, ta, tk] = key;
      if (genus != g) continue;
      inner += Rational(Integer(static_cast<unsigned long>(count))) * type_weight(u, census.types[ta]) *
               type_weight(v, census.types[tk]);
    }
    Integer denom = 1;
    for (int part : zeta.parts()) denom *= part;
    for (int i = 1; i <= n; ++i) denom *= factorial(static_cast<unsigned long>(zeta.multiplicity(i)));
    total += Rational(n) / Rational(denom) * inner;
  }
  return {n, k, g, total};
}

// (-1)^k sum_g s_k^{(g)}, the right side of the genus decomposition.
inline Rational genus_rhs(int n, int k, const Sequence& u, const Sequence& v, const Limits& limits = default_limits()) {
  Rational sum = 0;
  for (int g = 0; 2 * g <= k; ++g) sum += genus_layer(n, k, g, u, v, limits).value;
  return (k % 2 == 0) ? sum : Rational(-sum);
}

// sum over NC(n) of u_pi v_{Kr(pi)}, by direct enumeration and Kreweras complement.
inline Rational noncrossing_sum(int n, const Sequence& u, const Sequence& v, const Limits& limits = default_limits()) {
  detail::require_length(u, n, "weights u");
  detail::require_length(v, n, "weights v");
  Rational sum = 0;
  for (const auto& p : enumerate_noncrossing(n, limits)) {
    sum += type_weight(u, partition_type(p)) * type_weight(v, partition_type(kreweras(p)));
  }
  return sum;
}

// (type alpha, type Kr_{r,s}(alpha)) census of S_NC(r, s), from enumerate_annular.
inline const TypePairTable& annular_census(int r, int s, const Limits& limits = default_limits()) {
  static std::map<std::pair<int, int>, std::unique_ptr<TypePairTable>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({r, s});
  if (it != cache.end()) return *it->second;
  auto table = std::make_unique<TypePairTable>();
  table->n = r + s;
  table->types = partition_types(r + s);
  table->counts.assign(table->types.size(), std::vector<std::uint64_t>(table->types.size(), 0));
  const Permutation gamma = gamma_rs(r, s);
  for (const auto& a : enumerate_annular(r, s, limits)) {
    const Permutation kr = compose(a.inverse(), gamma);
    ++table->counts[type_index(table->types, a.cycle_type().as_partition_type())]
                   [type_index(table->types, kr.cycle_type().as_partition_type())];
  }
  return *cache.emplace(std::make_pair(r, s), std::move(table)).first->second;
}

// sum over S_NC(r, s) of u_alpha v_{Kr_{r,s}(alpha)}.
inline Rational annular_pair_sum(int r, int s, const Sequence& u, const Sequence& v,
                                 const Limits& limits = default_limits()) {
  const TypePairTable& table = annular_census(r, s, limits);
  Rational sum = 0;
  for (std::size_t i = 0; i < table.types.size(); ++i) {
    for (std::size_t j = 0; j < table.types.size(); ++j) {
      if (table.counts[i][j] == 0) continue;
      sum += Rational(Integer(static_cast<unsigned long>(table.counts[i][j]))) * type_weight(u, table.types[i]) *
             type_weight(v, table.types[j]);
    }
  }
  return sum;
}

// -(n/2) sum over ordered r + s = n of (1/(rs)) sum over S_NC(r, s) of u_alpha v_{Kr(alpha)}.
inline Rational annular_sum(int n, const Sequence& u, const Sequence& v, const Limits& limits = default_limits()) {
  detail::require_length(u, n, "weights u");
  detail::require_length(v, n, "weights v");
  Rational sum = 0;
  for (int r = 1; r < n; ++r) {
    const int s = n - r;
    sum += annular_pair_sum(r, s, u, v, limits) / Rational(r * s);
  }
  return -ratio(n, 2) * sum;
}

// F(f*g) = F(f) F(g) on P(n), with (f*g)(pi) = sum over sigma1 v sigma2 = pi of
// f(sigma1) g(sigma2) and F(h)(pi) = sum over sigma <= pi of h(sigma). The maps are
// indexed by the lexicographic enumeration order of P(n).
struct MobiusAlgebraResult {
  bool passed = true;
  std::optional<SetPartition> first_failure;
  Rational lhs, rhs;
};

inline MobiusAlgebraResult mobius_algebra_check(int n, const std::vector<Rational>& f, const std::vector<Rational>& g,
                                                const Limits& limits = default_limits()) {
  check_cap(n, limits.mobius_algebra, "Moebius-algebra size n");
  const auto parts = enumerate_partitions(n, limits);
  if (f.size() != parts.size() || g.size() != parts.size()) {
    throw dimension_error("mobius_algebra_check: f and g must have one value per partition of [n]");
  }
  std::map<SetPartition, std::size_t> index;
  for (std::size_t i = 0; i < parts.size(); ++i) index.emplace(parts[i], i);
  std::vector<Rational> conv(parts.size(), Rational(0));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts.size(); ++j) conv[index.at(join(parts[i], parts[j]))] += f[i] * g[j];
  }
  auto zeta_transform = [&](const std::vector<Rational>& h) {
    std::vector<Rational> out(parts.size(), Rational(0));
    for (std::size_t p = 0; p < parts.size(); ++p) {
      for (std::size_t s = 0; s < parts.size(); ++s) {
        if (parts[s].refines(parts[p])) out[p] += h[s];
      }
    }
    return out;
  };
  const auto Ff = zeta_transform(f), Fg = zeta_transform(g), Fc = zeta_transform(conv);
  MobiusAlgebraResult out;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (Fc[p] != Ff[p] * Fg[p]) {
      out.passed = false;
      out.first_failure = parts[p];
      out.lhs = Fc[p];
      out.rhs = Ff[p] * Fg[p];
      break;
    }
  }
  return out;
}

inline void require_admissible(const PartitionType& s, const PartitionType& t) {
  if (s.n() != t.n()) throw dimension_error("type pair over different n");
  if (s.block_count() + t.block_count() != s.n() + 1) {
    throw domain_error("type pair " + s.to_string() + ", " + t.to_string() + " violates |s| + |t| = n + 1");
  }
}

// A(s, t) = n (|s|-1)! (|t|-1)! / (prod s_i! prod t_i!).
inline Integer count_A(const PartitionType& s, const PartitionType& t) {
  require_admissible(s, t);
  Integer num = Integer(s.n()) * factorial(static_cast<unsigned long>(s.block_count() - 1)) *
                factorial(static_cast<unsigned long>(t.block_count() - 1));
  Integer den = 1;
  for (int i = 1; i <= s.n(); ++i) {
    den *= factorial(static_cast<unsigned long>(s.count(i)));
    den *= factorial(static_cast<unsigned long>(t.count(i)));
  }
  return num / den;
}

// B(s, t) = n! (|s|-1)! (|t|-1)! / (prod s_i! prod t_i! prod ((i-1)!)^{s_i} prod ((i-1)!)^{t_i}).
inline Integer count_B(const PartitionType& s, const PartitionType& t) {
  require_admissible(s, t);
  Integer num = factorial(static_cast<unsigned long>(s.n())) * factorial(static_cast<unsigned long>(s.block_count() - 1)) *
                factorial(static_cast<unsigned long>(t.block_count() - 1));
  Integer den = 1;
  for (int i = 1; i <= s.n(); ++i) {
    den *= factorial(static_cast<unsigned long>(s.count(i))) * factorial(static_cast<unsigned long>(t.count(i)));
    const Integer f = factorial(static_cast<unsigned long>(i - 1));
    for (int c = 0; c < s.count(i) + t.count(i); ++c) den *= f;
  }
  return num / den;
}

// Brute-force counterparts: NC(n) census and joined-pair census.
inline Integer count_A_enumerated(const PartitionType& s, const PartitionType& t, const Limits& limits = default_limits()) {
  require_admissible(s, t);
  return Integer(static_cast<unsigned long>(noncrossing_type_table(s.n(), limits).count(s, t)));
}

inline Integer count_B_enumerated(const PartitionType& s, const PartitionType& t, const Limits& limits = default_limits()) {
  require_admissible(s, t);
  return Integer(static_cast<unsigned long>(join_type_table(s.n(), limits).count(s, t)));
}

inline std::vector<std::pair<PartitionType, PartitionType>> admissible_type_pairs(int n) {
  std::vector<std::pair<PartitionType, PartitionType>> out;
  const auto types = partition_types(n);
  for (const auto& s : types) {
    for (const auto& t : types) {
      if (s.block_count() + t.block_count() == n + 1) out.emplace_back(s, t);
    }
  }
  return out;
}

}  // namespace ffp
