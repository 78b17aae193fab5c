#pragma once

// The measures mu_{b,h}, their heavy mass, the Y_{b,h} set and the
// class-average identity for conjugates of a subgroup.

#include <cstdint>
#include <vector>

#include "progmix/error.hpp"
#include "progmix/group_function.hpp"
#include "progmix/matrix_group.hpp"

namespace progmix {

// Nonnegative weights on a group, with their total.
class Measure {
 public:
  // Throws std::invalid_argument on a negative weight.
  explicit Measure(GroupFunction weights);
  // counts[y] / denominator.
  static Measure from_counts(const FiniteGroup& group,
                             const std::vector<std::uint64_t>& counts,
                             std::uint64_t denominator);

  const GroupFunction& weights() const { return weights_; }
  double total_mass() const { return total_mass_; }
  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }

 private:
  GroupFunction weights_;
  double total_mass_;
};

// |{(g, c) in G x Z(b) : g c^-1 h^-1 g^-1 c^-1 h^-1 = y}| for every y, indexed
// by table position.  Throws std::invalid_argument when b or h is not in the
// table, BudgetExceeded when |G| |Z(b)| exceeds the budget.
std::vector<std::uint64_t> phi_fibre_histogram(const GroupTable& table,
                                               const GroupElement& b,
                                               const GroupElement& h,
                                               std::uint64_t budget = op_budget());

// E_g E_{c in Z(b)} delta_{g c^-1 h^-1 g^-1 c^-1 h^-1}, exactly.
Measure mu_bh(const GroupTable& table, const GroupElement& b, const GroupElement& h,
              std::uint64_t budget = op_budget());

// Sum of the weights at atoms of weight >= C0 / |G|.  Throws
// std::invalid_argument when C0 < 1.
double heavy_mass(const Measure& mu, double C0);

struct PropGenEstimate {
  double value = 0.0;           // (C0 D^-1/2 + E heavy)^(1/4)
  double standard_error = 0.0;  // delta method from heavy_se
  double heavy_mean = 0.0;
  double heavy_se = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

// (b, h) pairs drawn from substream(seed, i); each histogram exact.
PropGenEstimate prop_gen_rhs(const GroupTable& table, double C0, double D,
                             std::uint64_t samples, std::uint64_t seed);

// {y : tr(y h c) = tr(h c) for all c in Z(b)} over F_p-points of Z(b).
// Throws std::invalid_argument unless b is regular semisimple.
GroupTable y_set(const GroupTable& table, const GroupElement& b, const GroupElement& h);

struct ClassAverageReport {
  std::vector<double> lhs;  // E_g mu_{g U g^-1}
  std::vector<double> rhs;  // E_{u in U} |C(u)|^-1 1_{C(u)}
  double max_abs_difference = 0.0;
  double lhs_mass = 0.0;
  double rhs_mass = 0.0;
};

ClassAverageReport class_average_identity_check(const GroupTable& table,
                                                const GroupTable& subgroup);

}  // namespace progmix
