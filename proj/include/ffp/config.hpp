#pragma once

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <string_view>

#include "ffp/errors.hpp"

namespace ffp {

// Enumeration caps. Bell and factorial growth make silent acceptance of
// large inputs a foot-gun, so every sweep checks its cap and fails loudly.
struct Limits {
  int partitions = 12;       // enumerate_partitions: n
  int pair_sweep = 8;        // sweeps over P(n) x P(n)
  int permutations = 9;      // full S_n sweeps (enumerate_snc)
  int genus_high_k = 7;      // genus_layer with k >= 2
  int genus_low_k = 8;       // genus_layer with k <= 1
  int annular = 9;           // r + s for annular sums
  int noncrossing = 12;      // NC(n) sums in free transforms
  int cumulant_order = 40;   // coefficient <-> cumulant type sums
  int mobius_algebra = 6;    // exhaustive Moebius-algebra check

  // Parses "key=value,key=value" overrides. Unknown keys are a parse error.
  static Limits parse(std::string_view spec, Limits base) {
    std::string text(spec);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      auto eq = item.find('=');
      if (eq == std::string::npos) throw parse_error("cap override '" + item + "' is not key=value");
      std::string key = item.substr(0, eq);
      int value = 0;
      try {
        value = std::stoi(item.substr(eq + 1));
      } catch (const std::exception&) {
        throw parse_error("cap override '" + item + "' has a non-integer value");
      }
      if (value < 1) throw parse_error("cap override '" + item + "' must be positive");
      int* slot = base.slot(key);
      if (slot == nullptr) throw parse_error("unknown cap '" + key + "'");
      *slot = value;
    }
    base.warn_if_raised();
    return base;
  }

  static Limits parse(std::string_view spec);

  // Defaults, overridden by the FFP_CAPS environment variable when set.
  static Limits from_env() {
    const char* env = std::getenv("FFP_CAPS");
    if (env == nullptr) return Limits{};
    return parse(env);
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "partitions=" << partitions << ",pair_sweep=" << pair_sweep << ",permutations=" << permutations
       << ",genus_high_k=" << genus_high_k << ",genus_low_k=" << genus_low_k << ",annular=" << annular
       << ",noncrossing=" << noncrossing << ",cumulant_order=" << cumulant_order
       << ",mobius_algebra=" << mobius_algebra;
    return os.str();
  }

 private:
  int* slot(const std::string& key) {
    if (key == "partitions") return &partitions;
    if (key == "pair_sweep") return &pair_sweep;
    if (key == "permutations") return &permutations;
    if (key == "genus_high_k") return &genus_high_k;
    if (key == "genus_low_k") return &genus_low_k;
    if (key == "annular") return &annular;
    if (key == "noncrossing") return &noncrossing;
    if (key == "cumulant_order") return &cumulant_order;
    if (key == "mobius_algebra") return &mobius_algebra;
    return nullptr;
  }

  void warn_if_raised() const {
    const Limits defaults{};
    if (genus_high_k > defaults.genus_high_k || pair_sweep > defaults.pair_sweep ||
        permutations > defaults.permutations) {
      std::cerr << "warning: enumeration caps raised above defaults (" << to_string()
                << "); sweeps may take a long time\n";
    }
  }
};

inline Limits Limits::parse(std::string_view spec) { return parse(spec, Limits{}); }

inline const Limits& default_limits() {
  static const Limits limits = Limits::from_env();
  return limits;
}

inline void check_cap(long long value, int cap, std::string_view what) {
  if (value > cap) {
    throw size_limit_error(std::string(what) + " = " + std::to_string(value) + " exceeds the configured cap " +
                           std::to_string(cap));
  }
}

}  // namespace ffp
