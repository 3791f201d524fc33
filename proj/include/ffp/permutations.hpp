#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "ffp/config.hpp"
#include "ffp/errors.hpp"
#include "ffp/partitions.hpp"
#include "ffp/rational.hpp"

namespace ffp {

// Integer partition zeta of n with parts listed in weakly decreasing order.
class CycleType {
 public:
  CycleType() = default;

  explicit CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw domain_error("cycle type needs at least one part");
    for (int p : parts_) {
      if (p < 1) throw domain_error("cycle type parts must be positive");
    }
    if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>())) {
      throw domain_error("cycle type parts must be weakly decreasing");
    }
  }

  static CycleType from_type(const PartitionType& t) { return CycleType(t.parts()); }

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int part_count() const { return static_cast<int>(parts_.size()); }

  // t_i: number of parts equal to i.
  int multiplicity(int i) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), i)); }

  PartitionType as_partition_type() const { return PartitionType::from_sizes(parts_); }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(parts_[i]);
    }
    return out + "]";
  }

  auto operator<=>(const CycleType&) const = default;

 private:
  std::vector<int> parts_;
};

inline std::vector<CycleType> cycle_types(int n) {
  std::vector<CycleType> out;
  for (const auto& t : partition_types(n)) out.push_back(CycleType::from_type(t));
  return out;
}

// Element of S_n acting on {1..n}; image()[i-1] = alpha(i).
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n) {
    if (n < 1) throw domain_error("permutation needs n >= 1");
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 1);
    return Permutation(std::move(image));
  }

  static Permutation from_image(std::vector<int> image) {
    if (image.empty()) throw domain_error("permutation needs n >= 1");
    std::vector<bool> hit(image.size(), false);
    for (int v : image) {
      if (v < 1 || v > static_cast<int>(image.size()) || hit[static_cast<std::size_t>(v - 1)]) {
        throw domain_error("image is not a bijection of {1..n}");
      }
      hit[static_cast<std::size_t>(v - 1)] = true;
    }
    return Permutation(std::move(image));
  }

  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (const auto& cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        int from = cycle[i];
        if (from < 1 || from > n) throw domain_error("cycle element " + std::to_string(from) + " outside [1,n]");
        if (used[static_cast<std::size_t>(from - 1)]) throw domain_error("cycle element " + std::to_string(from) + " repeated");
        used[static_cast<std::size_t>(from - 1)] = true;
        image[static_cast<std::size_t>(from - 1)] = cycle[(i + 1) % cycle.size()];
      }
    }
    return Permutation(std::move(image));
  }

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& image() const { return image_; }

  Permutation inverse() const {
    std::vector<int> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) inv[static_cast<std::size_t>(image_[i] - 1)] = static_cast<int>(i + 1);
    return Permutation(std::move(inv));
  }

  // Cycles starting at their least element, ordered by least element; fixed points included.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(image_.size(), false);
    for (int start = 1; start <= size(); ++start) {
      if (seen[static_cast<std::size_t>(start - 1)]) continue;
      std::vector<int> cycle;
      for (int x = start; !seen[static_cast<std::size_t>(x - 1)]; x = (*this)(x)) {
        seen[static_cast<std::size_t>(x - 1)] = true;
        cycle.push_back(x);
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  int cycle_count() const {
    int count = 0;
    std::vector<bool> seen(image_.size(), false);
    for (int start = 1; start <= size(); ++start) {
      if (seen[static_cast<std::size_t>(start - 1)]) continue;
      ++count;
      for (int x = start; !seen[static_cast<std::size_t>(x - 1)]; x = (*this)(x)) seen[static_cast<std::size_t>(x - 1)] = true;
    }
    return count;
  }

  CycleType cycle_type() const {
    std::vector<int> lengths;
    for (const auto& c : cycles()) lengths.push_back(static_cast<int>(c.size()));
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return CycleType(std::move(lengths));
  }

  std::string to_string() const {
    std::string out;
    for (const auto& cycle : cycles()) {
      out += "(";
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(cycle[i]);
      }
      out += ")";
    }
    return out;
  }

  auto operator<=>(const Permutation& other) const { return image_ <=> other.image_; }
  bool operator==(const Permutation& other) const { return image_ == other.image_; }

 private:
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {}
  std::vector<int> image_;
};

// Parses cycle notation "(1,7,4)(2,5)(3,6)". Fixed points may be omitted; when
// n is 0 it is inferred from the largest element mentioned.
inline Permutation parse_permutation(std::string_view text, int n = 0) {
  std::vector<std::vector<int>> cycles;
  int largest = 0;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw parse_error("cycle notation: expected '(' in '" + std::string(text) + "'");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw parse_error("cycle notation: expected an element in '" + std::string(text) + "'");
      int e = std::stoi(std::string(text.substr(start, i - start)));
      cycle.push_back(e);
      largest = std::max(largest, e);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      throw parse_error("cycle notation: expected ',' or ')' in '" + std::string(text) + "'");
    }
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  if (n == 0) n = largest;
  if (n < 1) throw parse_error("cycle notation: cannot infer n from '" + std::string(text) + "'");
  if (largest > n) throw parse_error("cycle notation: element " + std::to_string(largest) + " exceeds n");
  try {
    return Permutation::from_cycles(n, cycles);
  } catch (const domain_error& e) {
    throw parse_error(std::string("cycle notation: ") + e.what());
  }
}

// i -> a(b(i)): the rightmost factor acts first.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw dimension_error("compose: permutations of different degree");
  std::vector<int> image(static_cast<std::size_t>(a.size()));
  for (int i = 1; i <= a.size(); ++i) image[static_cast<std::size_t>(i - 1)] = a(b(i));
  return Permutation::from_image(std::move(image));
}

inline Permutation inverse(const Permutation& a) { return a.inverse(); }

// f(alpha): the partition whose blocks are the cycles of alpha.
inline SetPartition orbit_partition(const Permutation& a) {
  std::vector<int> labels(static_cast<std::size_t>(a.size()), -1);
  int next = 0;
  for (const auto& cycle : a.cycles()) {
    for (int e : cycle) labels[static_cast<std::size_t>(e - 1)] = next;
    ++next;
  }
  return SetPartition::from_labels(labels);
}

// gamma_zeta = (1..z_1)(z_1+1..z_1+z_2)...
inline Permutation canonical_gamma(const CycleType& z) {
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int part : z.parts()) {
    std::vector<int> cycle(static_cast<std::size_t>(part));
    std::iota(cycle.begin(), cycle.end(), next);
    next += part;
    cycles.push_back(std::move(cycle));
  }
  return Permutation::from_cycles(z.n(), cycles);
}

// gamma_{r,s} = (1..r)(r+1..r+s); r < s is allowed here, unlike canonical_gamma.
inline Permutation gamma_rs(int r, int s) {
  if (r < 1 || s < 1) throw domain_error("gamma_rs needs r, s >= 1");
  std::vector<int> outer(static_cast<std::size_t>(r));
  std::vector<int> inner(static_cast<std::size_t>(s));
  std::iota(outer.begin(), outer.end(), 1);
  std::iota(inner.begin(), inner.end(), r + 1);
  return Permutation::from_cycles(r + s, {outer, inner});
}

inline bool is_transitive_pair(const Permutation& a, const Permutation& g) {
  if (a.size() != g.size()) throw dimension_error("is_transitive_pair: permutations of different degree");
  return join(orbit_partition(a), orbit_partition(g)).block_count() == 1;
}

// Genus of a relative to g from #(a) + #(a^{-1} g) + #(g) = n + 2(1 - genus).
inline int relative_genus(const Permutation& a, const Permutation& g) {
  if (!is_transitive_pair(a, g)) throw domain_error("relative_genus: <a, g> is not transitive");
  const int n = a.size();
  const int excess = n + 2 - a.cycle_count() - compose(a.inverse(), g).cycle_count() - g.cycle_count();
  if (excess < 0 || excess % 2 != 0) {
    throw invariant_error("relative_genus: Euler count " + std::to_string(excess) + " is not a non-negative even integer");
  }
  return excess / 2;
}

namespace detail {

inline int cycle_count_of(const std::vector<int>& image, std::vector<char>& seen) {
  std::fill(seen.begin(), seen.end(), 0);
  int count = 0;
  for (std::size_t s = 0; s < image.size(); ++s) {
    if (seen[s]) continue;
    ++count;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(image[x] - 1)) seen[x] = 1;
  }
  return count;
}

// Block-connectivity of the orbits of a and g, via union-find on elements.
inline bool transitive(const std::vector<int>& a, const std::vector<int>& g, std::vector<int>& parent) {
  const std::size_t n = a.size();
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  int components = static_cast<int>(n);
  auto unite = [&](int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx != ry) {
      parent[static_cast<std::size_t>(rx)] = ry;
      --components;
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    unite(static_cast<int>(i), a[i] - 1);
    unite(static_cast<int>(i), g[i] - 1);
  }
  return components == 1;
}

}  // namespace detail

// Sweeps S_n in lexicographic order of the image and reports every alpha that
// is transitive with gamma, together with its relative genus and alpha^{-1} gamma.
template <typename Visitor>
void for_each_transitive(const Permutation& gamma, Visitor&& visit, int max_genus = -1,
                         const Limits& limits = default_limits()) {
  const int n = gamma.size();
  check_cap(n, limits.permutations, "permutation sweep size n");
  const int gamma_cycles = gamma.cycle_count();
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  std::vector<int> inv(static_cast<std::size_t>(n));
  std::vector<int> kr(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  do {
    const int alpha_cycles = detail::cycle_count_of(image, seen);
    // #(alpha^{-1} gamma) >= 1, so genus >= 0 caps #(alpha) at n + 1 - #(gamma);
    // a genus bound tightens this further.
    if (alpha_cycles > n + 1 - gamma_cycles) continue;
    if (!detail::transitive(image, gamma.image(), parent)) continue;
    for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(image[static_cast<std::size_t>(i)] - 1)] = i + 1;
    for (int i = 0; i < n; ++i) kr[static_cast<std::size_t>(i)] = inv[static_cast<std::size_t>(gamma.image()[static_cast<std::size_t>(i)] - 1)];
    const int kr_cycles = detail::cycle_count_of(kr, seen);
    const int excess = n + 2 - alpha_cycles - kr_cycles - gamma_cycles;
    if (excess < 0 || excess % 2 != 0) throw invariant_error("Euler count failed during S_n sweep");
    const int genus = excess / 2;
    if (max_genus >= 0 && genus > max_genus) continue;
    visit(image, kr, genus);
  } while (std::next_permutation(image.begin(), image.end()));
}

// S_NC^{(g)}[zeta]: alpha transitive with gamma_zeta and of genus g relative to it.
inline std::vector<Permutation> enumerate_snc_relative(const Permutation& gamma, int genus,
                                                       const Limits& limits = default_limits()) {
  if (genus < 0) throw domain_error("genus must be non-negative");
  std::vector<Permutation> out;
  for_each_transitive(gamma, [&](const std::vector<int>& image, const std::vector<int>&, int g) {
    if (g == genus) out.push_back(Permutation::from_image(image));
  }, genus, limits);
  return out;
}

inline std::vector<Permutation> enumerate_snc(const CycleType& z, int genus, const Limits& limits = default_limits()) {
  return enumerate_snc_relative(canonical_gamma(z), genus, limits);
}

// S_NC(r, s): genus-0 permutations transitive with gamma_{r,s}. Built from the
// Permutation API (orbit join plus Euler count) rather than the raw sweep above,
// so it can serve as an independent enumerator.
inline std::vector<Permutation> enumerate_annular(int r, int s, const Limits& limits = default_limits()) {
  check_cap(r + s, limits.annular, "annular size r+s");
  const Permutation gamma = gamma_rs(r, s);
  const SetPartition gamma_orbits = orbit_partition(gamma);
  std::vector<int> image(static_cast<std::size_t>(r + s));
  std::iota(image.begin(), image.end(), 1);
  std::vector<Permutation> out;
  do {
    Permutation a = Permutation::from_image(image);
    if (join(orbit_partition(a), gamma_orbits).block_count() != 1) continue;
    if (a.cycle_count() + compose(a.inverse(), gamma).cycle_count() == r + s) out.push_back(std::move(a));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

// Kr_{r,s}(a) = a^{-1} gamma_{r,s} for a in S_NC(r, s).
inline Permutation annular_kreweras(const Permutation& a, int r, int s) {
  if (a.size() != r + s) throw dimension_error("annular_kreweras: permutation degree differs from r+s");
  const Permutation gamma = gamma_rs(r, s);
  if (!is_transitive_pair(a, gamma)) throw domain_error("annular_kreweras: " + a.to_string() + " does not connect the two circles");
  if (relative_genus(a, gamma) != 0) throw domain_error("annular_kreweras: " + a.to_string() + " is not annular non-crossing");
  return compose(a.inverse(), gamma);
}

// N_zeta = n! / (prod zeta_i prod t_i!): the number of permutations of type zeta.
inline Integer type_count(const CycleType& z) {
  Integer denom = 1;
  for (int part : z.parts()) denom *= part;
  for (int i = 1; i <= z.n(); ++i) denom *= factorial(static_cast<unsigned long>(z.multiplicity(i)));
  return factorial(static_cast<unsigned long>(z.n())) / denom;
}

}  // namespace ffp
