#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "ffp/config.hpp"
#include "ffp/errors.hpp"
#include "ffp/rational.hpp"

namespace ffp {

// Block-size census of a set partition: counts[i-1] = number of blocks of size i.
// The same object doubles as the cycle type of a permutation.
class PartitionType {
 public:
  PartitionType() = default;

  explicit PartitionType(std::vector<int> counts) : counts_(std::move(counts)) {
    long total = 0;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      if (counts_[i] < 0) throw domain_error("partition type has a negative count");
      total += static_cast<long>(i + 1) * counts_[i];
    }
    if (total != static_cast<long>(counts_.size())) {
      throw domain_error("partition type counts do not satisfy sum i*s_i = n");
    }
  }

  // From a multiset of block sizes summing to n.
  static PartitionType from_sizes(const std::vector<int>& sizes) {
    int n = std::accumulate(sizes.begin(), sizes.end(), 0);
    std::vector<int> counts(static_cast<std::size_t>(n), 0);
    for (int s : sizes) {
      if (s < 1) throw domain_error("block sizes must be positive");
      ++counts[static_cast<std::size_t>(s - 1)];
    }
    return PartitionType(std::move(counts));
  }

  int n() const { return static_cast<int>(counts_.size()); }
  int count(int size) const { return (size >= 1 && size <= n()) ? counts_[static_cast<std::size_t>(size - 1)] : 0; }
  const std::vector<int>& counts() const { return counts_; }

  // |s| = s_1 + ... + s_n.
  int block_count() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

  // Block sizes, weakly decreasing.
  std::vector<int> parts() const {
    std::vector<int> out;
    for (int size = n(); size >= 1; --size) {
      for (int c = 0; c < count(size); ++c) out.push_back(size);
    }
    return out;
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(counts_[i]);
    }
    return out + ")";
  }

  auto operator<=>(const PartitionType&) const = default;

 private:
  std::vector<int> counts_;
};

// All block-size types of [n], ordered by weakly decreasing parts in
// reverse-lexicographic order: [n], [n-1,1], ..., [1,...,1].
inline std::vector<PartitionType> partition_types(int n) {
  if (n < 1) throw domain_error("partition_types needs n >= 1");
  std::vector<PartitionType> out;
  std::vector<int> parts{n};
  while (true) {
    out.push_back(PartitionType::from_sizes(parts));
    // Next integer partition in reverse-lex order.
    int rem = 0;
    while (!parts.empty() && parts.back() == 1) {
      rem += 1;
      parts.pop_back();
    }
    if (parts.empty()) break;
    int k = parts.back() - 1;
    parts.pop_back();
    rem += 1;
    parts.push_back(k);
    while (rem > k) {
      parts.push_back(k);
      rem -= k;
    }
    if (rem > 0) parts.push_back(rem);
  }
  return out;
}

// Index of `type` inside partition_types(type.n()).
inline std::size_t type_index(const std::vector<PartitionType>& types, const PartitionType& type) {
  auto it = std::find(types.begin(), types.end(), type);
  if (it == types.end()) throw invariant_error("type " + type.to_string() + " missing from type table");
  return static_cast<std::size_t>(it - types.begin());
}

// Number of set partitions of [n] with the given type: n! / prod (i!)^{s_i} s_i!.
inline Integer set_partitions_of_type(const PartitionType& t) {
  Integer denom = 1;
  for (int i = 1; i <= t.n(); ++i) {
    Integer fi = factorial(static_cast<unsigned long>(i));
    for (int c = 0; c < t.count(i); ++c) denom *= fi;
    denom *= factorial(static_cast<unsigned long>(t.count(i)));
  }
  return factorial(static_cast<unsigned long>(t.n())) / denom;
}

// mu(0_n, pi) for any pi of the given type.
inline Integer mobius_zero(const PartitionType& t) {
  Integer out = 1;
  for (int i = 2; i <= t.n(); ++i) {
    Integer f = factorial(static_cast<unsigned long>(i - 1));
    for (int c = 0; c < t.count(i); ++c) out *= f;
  }
  return ((t.n() - t.block_count()) % 2 == 0) ? out : Integer(-out);
}

// u_pi = prod over blocks of u_{|V|}; u holds u_1.. at index 0..
inline Rational type_weight(const Sequence& u, const PartitionType& t) {
  Rational out = 1;
  for (int i = 1; i <= t.n(); ++i) {
    if (t.count(i) == 0) continue;
    if (static_cast<std::size_t>(i) > u.size()) {
      throw domain_error("weight sequence too short: needs index " + std::to_string(i));
    }
    for (int c = 0; c < t.count(i); ++c) out *= u[static_cast<std::size_t>(i - 1)];
  }
  return out;
}

// A partition of [n] stored as its restricted-growth string: rgs[i] is the
// block index of element i+1, blocks numbered by least element from 0.
class SetPartition {
 public:
  SetPartition() = default;

  static SetPartition from_rgs(std::vector<int> rgs) {
    if (rgs.empty()) throw domain_error("a set partition needs n >= 1");
    int max_seen = -1;
    for (int v : rgs) {
      if (v < 0 || v > max_seen + 1) throw domain_error("not a restricted-growth string");
      max_seen = std::max(max_seen, v);
    }
    SetPartition p;
    p.rgs_ = std::move(rgs);
    p.blocks_ = max_seen + 1;
    return p;
  }

  // Relabels arbitrary block labels (one per element) into canonical form.
  static SetPartition from_labels(const std::vector<int>& labels) {
    std::vector<int> rgs(labels.size());
    std::vector<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& kv) { return kv.first == labels[i]; });
      if (it == seen.end()) {
        seen.emplace_back(labels[i], static_cast<int>(seen.size()));
        rgs[i] = static_cast<int>(seen.size()) - 1;
      } else {
        rgs[i] = it->second;
      }
    }
    return from_rgs(std::move(rgs));
  }

  // Blocks use 1-based elements and must cover {1..n} exactly once.
  static SetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    if (n < 1) throw domain_error("a set partition needs n >= 1");
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) throw domain_error("empty block");
      for (int e : blocks[b]) {
        if (e < 1 || e > n) throw domain_error("element " + std::to_string(e) + " outside [1," + std::to_string(n) + "]");
        if (label[static_cast<std::size_t>(e - 1)] != -1) throw domain_error("element " + std::to_string(e) + " repeated");
        label[static_cast<std::size_t>(e - 1)] = static_cast<int>(b);
      }
    }
    for (int e = 1; e <= n; ++e) {
      if (label[static_cast<std::size_t>(e - 1)] == -1) throw domain_error("element " + std::to_string(e) + " not covered");
    }
    return from_labels(label);
  }

  static SetPartition finest(int n) {
    std::vector<int> rgs(static_cast<std::size_t>(n));
    std::iota(rgs.begin(), rgs.end(), 0);
    return from_rgs(std::move(rgs));
  }

  static SetPartition coarsest(int n) { return from_rgs(std::vector<int>(static_cast<std::size_t>(n), 0)); }

  int size() const { return static_cast<int>(rgs_.size()); }
  int block_count() const { return blocks_; }
  const std::vector<int>& rgs() const { return rgs_; }
  int block_of(int element) const { return rgs_.at(static_cast<std::size_t>(element - 1)); }

  // Blocks ordered by least element, elements ascending, 1-based.
  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(blocks_));
    for (std::size_t i = 0; i < rgs_.size(); ++i) out[static_cast<std::size_t>(rgs_[i])].push_back(static_cast<int>(i + 1));
    return out;
  }

  std::vector<int> block_sizes() const {
    std::vector<int> out(static_cast<std::size_t>(blocks_), 0);
    for (int b : rgs_) ++out[static_cast<std::size_t>(b)];
    return out;
  }

  // Bitmask per block (element i -> bit i-1). Needs n <= 32.
  std::vector<std::uint32_t> block_masks() const {
    std::vector<std::uint32_t> out(static_cast<std::size_t>(blocks_), 0);
    for (std::size_t i = 0; i < rgs_.size(); ++i) out[static_cast<std::size_t>(rgs_[i])] |= (std::uint32_t{1} << i);
    return out;
  }

  // this <= other in the refinement order.
  bool refines(const SetPartition& other) const {
    if (size() != other.size()) throw dimension_error("refines: partitions of different ground sets");
    std::vector<int> image(static_cast<std::size_t>(blocks_), -1);
    for (std::size_t i = 0; i < rgs_.size(); ++i) {
      int& slot = image[static_cast<std::size_t>(rgs_[i])];
      if (slot == -1) {
        slot = other.rgs_[i];
      } else if (slot != other.rgs_[i]) {
        return false;
      }
    }
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& block : blocks()) {
      out += "{";
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(block[i]);
      }
      out += "}";
    }
    return out;
  }

  auto operator<=>(const SetPartition& other) const { return rgs_ <=> other.rgs_; }
  bool operator==(const SetPartition& other) const { return rgs_ == other.rgs_; }

 private:
  std::vector<int> rgs_;
  int blocks_ = 0;
};

// Parses the canonical text form "{1,3}{2}{4}". n is inferred as the largest element.
inline SetPartition parse_partition(std::string_view text) {
  std::vector<std::vector<int>> blocks;
  std::size_t i = 0;
  int n = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '{') throw parse_error("partition text: expected '{' in '" + std::string(text) + "'");
    ++i;
    std::vector<int> block;
    while (true) {
      skip_ws();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw parse_error("partition text: expected an element in '" + std::string(text) + "'");
      int e = std::stoi(std::string(text.substr(start, i - start)));
      block.push_back(e);
      n = std::max(n, e);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == '}') {
        ++i;
        break;
      }
      throw parse_error("partition text: expected ',' or '}' in '" + std::string(text) + "'");
    }
    blocks.push_back(std::move(block));
    skip_ws();
  }
  if (blocks.empty()) throw parse_error("partition text is empty");
  try {
    return SetPartition::from_blocks(n, blocks);
  } catch (const domain_error& e) {
    throw parse_error(std::string("partition text: ") + e.what());
  }
}

inline PartitionType partition_type(const SetPartition& p) { return PartitionType::from_sizes(p.block_sizes()); }

inline Integer mobius_zero(const SetPartition& p) { return mobius_zero(partition_type(p)); }

// Visits every partition of [n] in lexicographic order of the restricted-growth string.
template <typename Visitor>
void for_each_partition(int n, Visitor&& visit, const Limits& limits = default_limits()) {
  if (n < 1) throw domain_error("enumerate_partitions needs n >= 1");
  check_cap(n, limits.partitions, "partition enumeration size n");
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
  while (true) {
    visit(SetPartition::from_rgs(rgs));
    int i = n - 1;
    while (i >= 1 && rgs[static_cast<std::size_t>(i)] > prefix_max[static_cast<std::size_t>(i - 1)]) --i;
    if (i < 1) return;
    ++rgs[static_cast<std::size_t>(i)];
    prefix_max[static_cast<std::size_t>(i)] = std::max(prefix_max[static_cast<std::size_t>(i - 1)], rgs[static_cast<std::size_t>(i)]);
    for (int j = i + 1; j < n; ++j) {
      rgs[static_cast<std::size_t>(j)] = 0;
      prefix_max[static_cast<std::size_t>(j)] = prefix_max[static_cast<std::size_t>(i)];
    }
  }
}

inline std::vector<SetPartition> enumerate_partitions(int n, const Limits& limits = default_limits()) {
  std::vector<SetPartition> out;
  for_each_partition(n, [&](const SetPartition& p) { out.push_back(p); }, limits);
  return out;
}

// Finest partition coarser than both: union-find over the blocks of a and b.
inline SetPartition join(const SetPartition& a, const SetPartition& b) {
  if (a.size() != b.size()) throw dimension_error("join: partitions of different ground sets");
  const int n = a.size();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite_blocks = [&](const SetPartition& p) {
    std::vector<int> first(static_cast<std::size_t>(p.block_count()), -1);
    for (int i = 0; i < n; ++i) {
      int& f = first[static_cast<std::size_t>(p.rgs()[static_cast<std::size_t>(i)])];
      if (f == -1) {
        f = i;
      } else {
        parent[static_cast<std::size_t>(find(i))] = find(f);
      }
    }
  };
  unite_blocks(a);
  unite_blocks(b);
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = find(i);
  return SetPartition::from_labels(labels);
}

// Single left-to-right scan: a block may only be revisited while it is the
// innermost open block.
inline bool is_noncrossing(const SetPartition& p) {
  const auto& r = p.rgs();
  const int n = p.size();
  std::vector<int> last(static_cast<std::size_t>(p.block_count()), -1);
  for (int i = 0; i < n; ++i) last[static_cast<std::size_t>(r[static_cast<std::size_t>(i)])] = i;
  std::vector<bool> opened(static_cast<std::size_t>(p.block_count()), false);
  std::vector<int> stack;
  for (int i = 0; i < n; ++i) {
    int b = r[static_cast<std::size_t>(i)];
    if (!opened[static_cast<std::size_t>(b)]) {
      opened[static_cast<std::size_t>(b)] = true;
      stack.push_back(b);
    } else if (stack.back() != b) {
      return false;
    }
    if (last[static_cast<std::size_t>(b)] == i) stack.pop_back();
  }
  return true;
}

// Kreweras complement of a non-crossing partition: lift p to the permutation
// alpha whose cycles run through each block in increasing order, then return
// the orbits of alpha^{-1} gamma_n (right-to-left composition).
inline SetPartition kreweras(const SetPartition& p) {
  if (!is_noncrossing(p)) throw domain_error("kreweras: " + p.to_string() + " is crossing");
  const int n = p.size();
  std::vector<int> alpha_inv(static_cast<std::size_t>(n));
  for (const auto& block : p.blocks()) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      int from = block[i];
      int to = block[(i + 1) % block.size()];
      alpha_inv[static_cast<std::size_t>(to - 1)] = from;
    }
  }
  std::vector<int> labels(static_cast<std::size_t>(n), -1);
  int next_label = 0;
  for (int start = 1; start <= n; ++start) {
    if (labels[static_cast<std::size_t>(start - 1)] != -1) continue;
    int x = start;
    while (labels[static_cast<std::size_t>(x - 1)] == -1) {
      labels[static_cast<std::size_t>(x - 1)] = next_label;
      int gx = x % n + 1;
      x = alpha_inv[static_cast<std::size_t>(gx - 1)];
    }
    ++next_label;
  }
  return SetPartition::from_labels(labels);
}

inline std::vector<SetPartition> enumerate_noncrossing(int n, const Limits& limits = default_limits()) {
  std::vector<SetPartition> out;
  for_each_partition(n, [&](const SetPartition& p) {
    if (is_noncrossing(p)) out.push_back(p);
  }, limits);
  return out;
}

}  // namespace ffp
