#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "ffp/config.hpp"
#include "ffp/partitions.hpp"
#include "ffp/rational.hpp"

namespace ffp {

// counts[i][j] = number of pairs with first member of type types[i] and second
// of type types[j], for the pair class the table was built for.
struct TypePairTable {
  int n = 0;
  std::vector<PartitionType> types;
  std::vector<std::vector<std::uint64_t>> counts;

  std::uint64_t count(const PartitionType& s, const PartitionType& t) const {
    return counts[type_index(types, s)][type_index(types, t)];
  }
};

namespace detail {

inline std::uint32_t close_over(const std::vector<std::uint32_t>& blocks, std::uint32_t mask) {
  std::uint32_t out = 0;
  for (std::uint32_t b : blocks) {
    if (b & mask) out |= b;
  }
  return out;
}

// Grows the component of element 1 alternately through the blocks of a and b.
inline bool joins_to_top(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b, std::uint32_t full) {
  std::uint32_t mask = 1;
  while (true) {
    std::uint32_t next = close_over(b, close_over(a, mask));
    if (next == full) return true;
    if (next == mask) return false;
    mask = next;
  }
}

inline TypePairTable build_join_table(int n, const Limits& limits) {
  TypePairTable table;
  table.n = n;
  table.types = partition_types(n);
  const std::size_t nt = table.types.size();
  table.counts.assign(nt, std::vector<std::uint64_t>(nt, 0));
  std::vector<std::vector<std::uint32_t>> masks;
  std::vector<std::size_t> type_of;
  for_each_partition(n, [&](const SetPartition& p) {
    masks.push_back(p.block_masks());
    type_of.push_back(type_index(table.types, partition_type(p)));
  }, limits);
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);
  const std::size_t count = masks.size();
  for (std::size_t i = 0; i < count; ++i) {
    // The join is symmetric: visit unordered pairs and credit both orders.
    for (std::size_t j = i; j < count; ++j) {
      if (!joins_to_top(masks[i], masks[j], full)) continue;
      ++table.counts[type_of[i]][type_of[j]];
      if (i != j) ++table.counts[type_of[j]][type_of[i]];
    }
  }
  return table;
}

inline TypePairTable build_noncrossing_table(int n, const Limits& limits) {
  TypePairTable table;
  table.n = n;
  table.types = partition_types(n);
  const std::size_t nt = table.types.size();
  table.counts.assign(nt, std::vector<std::uint64_t>(nt, 0));
  for_each_partition(n, [&](const SetPartition& p) {
    if (!is_noncrossing(p)) return;
    ++table.counts[type_index(table.types, partition_type(p))][type_index(table.types, partition_type(kreweras(p)))];
  }, limits);
  return table;
}

template <typename Builder>
const TypePairTable& cached_table(std::map<int, std::unique_ptr<TypePairTable>>& cache, std::mutex& mutex, int n,
                                  Builder&& build) {
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, std::make_unique<TypePairTable>(build())).first;
  return *it->second;
}

}  // namespace detail

// Exhaustive census of pairs (sigma, tau) in P(n)^2 with sigma v tau = 1_n.
inline const TypePairTable& join_type_table(int n, const Limits& limits = default_limits()) {
  if (n < 1) throw domain_error("pair sweep needs n >= 1");
  check_cap(n, limits.pair_sweep, "pair sweep size n");
  static std::map<int, std::unique_ptr<TypePairTable>> cache;
  static std::mutex mutex;
  return detail::cached_table(cache, mutex, n, [&] { return detail::build_join_table(n, limits); });
}

// Census of (type pi, type Kr(pi)) over NC(n).
inline const TypePairTable& noncrossing_type_table(int n, const Limits& limits = default_limits()) {
  if (n < 1) throw domain_error("non-crossing sweep needs n >= 1");
  check_cap(n, limits.noncrossing, "non-crossing enumeration size n");
  static std::map<int, std::unique_ptr<TypePairTable>> cache;
  static std::mutex mutex;
  return detail::cached_table(cache, mutex, n, [&] { return detail::build_noncrossing_table(n, limits); });
}

// S_j = sum over sigma v tau = 1_n with |sigma| + |tau| = n + 1 - j of
// mu(0,sigma) mu(0,tau) u_sigma v_tau, for j = 0..n-1.
inline std::vector<Rational> join_pair_layers(int n, const Sequence& u, const Sequence& v,
                                              const Limits& limits = default_limits()) {
  const TypePairTable& table = join_type_table(n, limits);
  const std::size_t nt = table.types.size();
  std::vector<Rational> mu_u(nt), mu_v(nt);
  for (std::size_t i = 0; i < nt; ++i) {
    Rational mu(mobius_zero(table.types[i]));
    mu_u[i] = mu * type_weight(u, table.types[i]);
    mu_v[i] = mu * type_weight(v, table.types[i]);
  }
  std::vector<Rational> layers(static_cast<std::size_t>(n), Rational(0));
  for (std::size_t i = 0; i < nt; ++i) {
    if (mu_u[i] == 0) continue;
    for (std::size_t j = 0; j < nt; ++j) {
      const std::uint64_t c = table.counts[i][j];
      if (c == 0 || mu_v[j] == 0) continue;
      const int layer = n + 1 - table.types[i].block_count() - table.types[j].block_count();
      if (layer < 0 || layer >= n) throw invariant_error("joined pair with |sigma|+|tau| > n+1");
      layers[static_cast<std::size_t>(layer)] += Rational(Integer(static_cast<unsigned long>(c))) * mu_u[i] * mu_v[j];
    }
  }
  return layers;
}

}  // namespace ffp
