#pragma once

// Point counts of a few fixed varieties over F_p, normalised by p^dim.

#include <cstdint>
#include <string>
#include <vector>

#include "progmix/error.hpp"

namespace progmix {

struct VarietyCount {
  std::string variety;
  std::int64_t p = 0;
  int d = 0;
  int dimension = 0;
  int components = 1;  // geometrically irreducible components of top dimension
  std::uint64_t count = 0;
  // Schwarz-Zippel style ceiling degree * p^dim.
  double upper_bound = 0.0;

  double normalised() const;
  // |count / p^dim - components| * p^(1/2); bounded in p under Lang-Weil.
  double lang_weil_error() const;
};

// SL_d itself, {tr x = 0} in SL_d, the split and non-split tori of SL_2,
// and the conic x^2 + k y^2 = x.  d = 3 entries need an enumerable group.
std::vector<VarietyCount> variety_counts(std::int64_t p, int d, std::int64_t conic_k = 2,
                                         std::uint64_t budget = kDefaultGroupBudget);

}  // namespace progmix
