// The group generated by twists along fiber-supported spherical objects,
// kept as formal words and mapped to one mapping class group per I_n fiber.
#pragma once

#include <string>
#include <vector>

#include "tmcg/mcg.hpp"

namespace tmcg {

/// Component counts of the reducible fibers.
class FiberConfig {
 public:
  /// Throws std::invalid_argument if empty or some count is below 2.
  explicit FiberConfig(std::vector<int> counts);
  std::size_t size() const { return counts_.size(); }
  /// j is 1-based.
  int components(int j) const { return counts_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<int>& counts() const { return counts_; }

 private:
  std::vector<int> counts_;
};

/// T_{O_{G_i}(a)} on fiber j, or its inverse.
struct BGen {
  int fiber = 1;
  int i = 1;
  int a = -1;
  int sign = 1;

  BGen inverse() const { return {fiber, i, a, -sign}; }
  friend bool operator==(const BGen&, const BGen&) = default;
};

using BWord = std::vector<BGen>;

std::string to_string(const BGen& g);
std::string to_string(const BWord& w);

BWord inverse(const BWord& w);
/// Concatenation with adjacent inverse pairs cancelled.
BWord reduce(const BWord& w);

/// Throws std::invalid_argument for a fiber or component outside the config.
void check_word(const BWord& w, const FiberConfig& cfg);

/// Factor j receives the half twist along ARC_i(a) (to the power sign) for
/// each letter on fiber j, composed left to right; other factors get identity.
std::vector<MappingClass> image(const BWord& w, const FiberConfig& cfg);

/// Every factor of the image is the identity mapping class.
bool is_in_kernel(const BWord& w, const FiberConfig& cfg);

/// Two-letter word acting as tensoring by O_S(G_i) on fiber j: g(a) g(a-1).
/// Its image is T_{i-1} T_i^-2 T_{i+1} for every a.
BWord component_pair(int fiber, int i, int a = 0);
/// Product of the component pairs over a whole fiber (tensoring by O_S(Y_j)).
BWord fiber_class_word(const FiberConfig& cfg, int fiber);

/// A word in the degree -1 and 0 generators of (fiber, i) with the same image
/// as BGen{fiber, i, a, +1}.
BWord express_in_generators(int fiber, int i, int a);

}  // namespace tmcg
