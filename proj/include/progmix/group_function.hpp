#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "progmix/matrix_group.hpp"
#include "progmix/rng.hpp"

namespace progmix {

// Dense real-valued function on the positions of a FiniteGroup.  Holds a
// non-owning reference to the group, which must outlive it.
class GroupFunction {
 public:
  GroupFunction(const FiniteGroup& group, std::vector<double> values);

  static GroupFunction zeros(const FiniteGroup& group);
  static GroupFunction constant(const FiniteGroup& group, double c);
  static GroupFunction delta(const FiniteGroup& group, std::size_t at);
  static GroupFunction indicator(const FiniteGroup& group,
                                 std::span<const std::size_t> members);
  // (1/|G|) 1_G.
  static GroupFunction uniform(const FiniteGroup& group);

  const FiniteGroup& group() const { return *group_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }
  std::span<const double> values() const { return values_; }

  double mean() const;
  double sum() const;
  // (E |f|^2)^(1/2)
  double l2_norm() const;
  double linf_norm() const;
  // sum |f|, resp. (sum |f|^2)^(1/2)
  double l1_sum() const;
  double l2_sum() const;
  // True when every value is one of -1, 0, 1.
  bool is_small_integer() const;

  GroupFunction minus_mean() const;
  GroupFunction scaled(double c) const;
  friend GroupFunction operator+(const GroupFunction& a, const GroupFunction& b);
  friend GroupFunction operator-(const GroupFunction& a, const GroupFunction& b);

 private:
  const FiniteGroup* group_;
  std::vector<double> values_;
};

// Throws std::invalid_argument unless both functions live on the same group.
void require_same_group(const GroupFunction& a, const GroupFunction& b);

// Test-function generators shared by the experiments and the tests.
GroupFunction random_sign(const FiniteGroup& group, Rng& rng);
GroupFunction random_uniform(const FiniteGroup& group, Rng& rng, double lo = -1.0,
                             double hi = 1.0);
// Indicator of a random set, each element kept with probability `density`.
GroupFunction random_indicator(const FiniteGroup& group, Rng& rng, double density);
// Random probability measure (nonnegative, total mass 1).
GroupFunction random_probability(const FiniteGroup& group, Rng& rng);
// 1_{gH} - |H|/|G| for a uniformly random left coset gH of `subgroup`.
GroupFunction random_coset_indicator(const GroupTable& group,
                                     const GroupTable& subgroup, Rng& rng);

}  // namespace progmix
