#pragma once

// Progression-mixing forms on a finite group G:
//
//   lambda_k      = E_{x,g} prod_{i<k} f_i(x g^i)
//   lambda_star_k = E_g | E_x prod_{i<k} f_i(x g^i) - prod_i E f_i |
//
// The shift exponents run over 0..k-1; averaging over x makes this the same
// quantity as the x g^(i-1) convention (substitute x -> x g).

#include <cstdint>
#include <optional>
#include <span>

#include "progmix/error.hpp"
#include "progmix/group_function.hpp"
#include "progmix/matrix_group.hpp"

namespace progmix {

struct MixingResult {
  double value = 0.0;
  double product_of_means = 0.0;
  // |value - product_of_means| for lambda_k; equal to value for the starred
  // forms, which already measure a deviation.
  double deviation = 0.0;
  // Plain form E_{x,g} prod f_i(x g^i) over the same shifts, computed on the
  // way (for the starred forms this is the quantity bounded by tri-eq).
  double lambda_value = 0.0;
  // nullopt means exact evaluation.
  std::optional<std::uint64_t> samples;
  double standard_error = 0.0;
  // sum_{x,g} prod f_i(x g^i) when every input takes values in {-1, 0, 1}.
  std::optional<std::int64_t> exact_count;

  bool is_exact() const { return !samples.has_value(); }
};

struct SamplingOptions {
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
};

// Exact evaluation.  Throws BudgetExceeded if |G|^2 * k > budget.
MixingResult lambda_k(const FiniteGroup& group, std::span<const GroupFunction> fs,
                      std::uint64_t budget = op_budget());
MixingResult lambda_star_k(const FiniteGroup& group,
                           std::span<const GroupFunction> fs,
                           std::uint64_t budget = op_budget());

// Monte-Carlo: uniform (x, g) pairs for lambda_k; uniform g with an exact
// inner x-average for lambda_star_k.  Sample i uses substream(seed, i).
MixingResult lambda_k_sampled(const FiniteGroup& group,
                              std::span<const GroupFunction> fs,
                              const SamplingOptions& options);
MixingResult lambda_star_k_sampled(const FiniteGroup& group,
                                   std::span<const GroupFunction> fs,
                                   const SamplingOptions& options);

// g restricted to `shift_set`, x over all of `table`.  signed_form = false
// puts the absolute value inside the g-average, true outside.
MixingResult lambda_star_restricted(const GroupTable& table,
                                    const GroupTable& shift_set,
                                    std::span<const GroupFunction> fs,
                                    bool signed_form,
                                    std::uint64_t budget = op_budget());

// (f * mu)(x) = sum_y f(y) mu(y^-1 x), unnormalised.
GroupFunction convolve(const GroupFunction& f, const GroupFunction& mu);

// f * mu_U with mu_U = 1_U / |U|, for f on a group containing U.
GroupFunction coset_smooth(const GroupFunction& f, const GroupTable& subgroup);

}  // namespace progmix
