#include "progmix/mixing_forms.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "progmix/parallel.hpp"
#include "progmix/rng.hpp"

namespace progmix {

namespace {

void check_inputs(const FiniteGroup& group, std::span<const GroupFunction> fs) {
  if (fs.empty() || fs.size() > 4) {
    throw std::invalid_argument("mixing forms take between 1 and 4 functions, got " +
                                std::to_string(fs.size()));
  }
  for (const auto& f : fs) {
    if (&f.group() != &group) {
      throw std::invalid_argument("mixing form input lives on a different group");
    }
  }
}

double product_of_means(std::span<const GroupFunction> fs) {
  double m = 1.0;
  for (const auto& f : fs) m *= f.mean();
  return m;
}

bool all_small_integer(std::span<const GroupFunction> fs) {
  for (const auto& f : fs) {
    if (!f.is_small_integer()) return false;
  }
  return true;
}

// Indices of g^0 .. g^(k-1).
std::array<std::size_t, 4> powers(const FiniteGroup& group, std::size_t g, std::size_t k) {
  std::array<std::size_t, 4> pw{};
  pw[0] = group.identity();
  for (std::size_t i = 1; i < k; ++i) pw[i] = group.product(pw[i - 1], g);
  return pw;
}

// Inner sums S(g) = sum_x prod_i f_i(x g^i), for each requested shift.
struct InnerSums {
  std::vector<double> real;
  std::vector<std::int64_t> integer;  // filled on the integer path
  bool integral = false;
};

InnerSums inner_sums(const FiniteGroup& group, std::span<const GroupFunction> fs,
                     std::span<const std::size_t> shifts) {
  const std::size_t n = group.size();
  const std::size_t k = fs.size();
  InnerSums out;
  out.integral = all_small_integer(fs);
  out.real.assign(shifts.size(), 0.0);
  if (out.integral) out.integer.assign(shifts.size(), 0);

  parallel_for(shifts.size(), [&](std::size_t s) {
    const auto pw = powers(group, shifts[s], k);
    if (out.integral) {
      std::int64_t acc = 0;
      for (std::size_t x = 0; x < n; ++x) {
        std::int64_t term = static_cast<std::int64_t>(fs[0][x]);
        for (std::size_t i = 1; i < k && term != 0; ++i) {
          term *= static_cast<std::int64_t>(fs[i][group.product(x, pw[i])]);
        }
        acc += term;
      }
      out.integer[s] = acc;
      out.real[s] = static_cast<double>(acc);
    } else {
      std::vector<double> terms(n);
      for (std::size_t x = 0; x < n; ++x) {
        double term = fs[0][x];
        for (std::size_t i = 1; i < k; ++i) term *= fs[i][group.product(x, pw[i])];
        terms[x] = term;
      }
      out.real[s] = pairwise_sum(terms);
    }
  });
  return out;
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

MixingResult summarise(std::span<const GroupFunction> fs, const InnerSums& sums,
                       std::size_t x_count, bool starred, bool signed_form) {
  MixingResult r;
  r.product_of_means = product_of_means(fs);
  const double shifts = static_cast<double>(sums.real.size());
  const double xs = static_cast<double>(x_count);
  double total = 0.0;
  if (sums.integral) {
    std::int64_t count = 0;
    for (std::int64_t c : sums.integer) count += c;
    r.exact_count = count;
    total = static_cast<double>(count);
  } else {
    total = pairwise_sum(sums.real);
  }
  r.lambda_value = total / (shifts * xs);
  if (!starred) {
    r.value = r.lambda_value;
    r.deviation = std::abs(r.value - r.product_of_means);
    return r;
  }
  if (signed_form) {
    r.value = std::abs(r.lambda_value - r.product_of_means);
  } else {
    std::vector<double> dev(sums.real.size());
    for (std::size_t s = 0; s < dev.size(); ++s) {
      dev[s] = std::abs(sums.real[s] / xs - r.product_of_means);
    }
    r.value = pairwise_sum(dev) / shifts;
  }
  r.deviation = r.value;
  return r;
}

void check_budget(const char* what, std::size_t shifts, std::size_t xs, std::size_t k,
                  std::uint64_t budget) {
  const std::uint64_t ops = static_cast<std::uint64_t>(shifts) * xs * k;
  require_budget(std::string(what) + " (exact mode; use sampling instead)", ops, budget);
}

}  // namespace

MixingResult lambda_k(const FiniteGroup& group, std::span<const GroupFunction> fs,
                      std::uint64_t budget) {
  check_inputs(group, fs);
  check_budget("lambda_k", group.size(), group.size(), fs.size(), budget);
  const auto shifts = all_indices(group.size());
  return summarise(fs, inner_sums(group, fs, shifts), group.size(), false, false);
}

MixingResult lambda_star_k(const FiniteGroup& group, std::span<const GroupFunction> fs,
                           std::uint64_t budget) {
  check_inputs(group, fs);
  check_budget("lambda_star_k", group.size(), group.size(), fs.size(), budget);
  const auto shifts = all_indices(group.size());
  return summarise(fs, inner_sums(group, fs, shifts), group.size(), true, false);
}

MixingResult lambda_star_restricted(const GroupTable& table, const GroupTable& shift_set,
                                    std::span<const GroupFunction> fs, bool signed_form,
                                    std::uint64_t budget) {
  check_inputs(table, fs);
  if (shift_set.size() == 0) throw std::invalid_argument("empty shift set");
  check_budget("lambda_star_restricted", shift_set.size(), table.size(), fs.size(), budget);
  std::vector<std::size_t> shifts(shift_set.size());
  for (std::size_t j = 0; j < shift_set.size(); ++j) {
    shifts[j] = table.index_of(shift_set.element(j));
    if (shifts[j] == kNoIndex) throw std::invalid_argument("shift set is not a subset of the table");
  }
  return summarise(fs, inner_sums(table, fs, shifts), table.size(), true, signed_form);
}

MixingResult lambda_k_sampled(const FiniteGroup& group, std::span<const GroupFunction> fs,
                              const SamplingOptions& options) {
  check_inputs(group, fs);
  if (options.samples < 2) throw std::invalid_argument("sampling needs at least 2 samples");
  const std::size_t n = group.size();
  const std::size_t k = fs.size();
  std::vector<double> draws(options.samples);
  parallel_for(draws.size(), [&](std::size_t s) {
    Rng rng = substream(options.seed, s);
    const std::size_t x = uniform_index(rng, n);
    const std::size_t g = uniform_index(rng, n);
    const auto pw = powers(group, g, k);
    double term = fs[0][x];
    for (std::size_t i = 1; i < k; ++i) term *= fs[i][group.product(x, pw[i])];
    draws[s] = term;
  });
  MixingResult r;
  r.product_of_means = product_of_means(fs);
  const double m = pairwise_sum(draws) / static_cast<double>(draws.size());
  std::vector<double> sq(draws.size());
  for (std::size_t s = 0; s < sq.size(); ++s) sq[s] = (draws[s] - m) * (draws[s] - m);
  const double var = pairwise_sum(sq) / static_cast<double>(draws.size() - 1);
  r.value = r.lambda_value = m;
  r.deviation = std::abs(m - r.product_of_means);
  r.samples = options.samples;
  r.standard_error = std::sqrt(var / static_cast<double>(draws.size()));
  return r;
}

MixingResult lambda_star_k_sampled(const FiniteGroup& group,
                                   std::span<const GroupFunction> fs,
                                   const SamplingOptions& options) {
  check_inputs(group, fs);
  if (options.samples < 2) throw std::invalid_argument("sampling needs at least 2 samples");
  std::vector<std::size_t> shifts(options.samples);
  for (std::size_t s = 0; s < shifts.size(); ++s) {
    Rng rng = substream(options.seed, s);
    shifts[s] = uniform_index(rng, group.size());
  }
  const InnerSums sums = inner_sums(group, fs, shifts);
  MixingResult r = summarise(fs, sums, group.size(), true, false);
  std::vector<double> dev(shifts.size());
  for (std::size_t s = 0; s < dev.size(); ++s) {
    const double d = std::abs(sums.real[s] / static_cast<double>(group.size()) - r.product_of_means);
    dev[s] = (d - r.value) * (d - r.value);
  }
  r.exact_count.reset();
  r.samples = options.samples;
  r.standard_error = std::sqrt(pairwise_sum(dev) / static_cast<double>(dev.size() - 1) /
                               static_cast<double>(dev.size()));
  return r;
}

GroupFunction convolve(const GroupFunction& f, const GroupFunction& mu) {
  require_same_group(f, mu);
  const FiniteGroup& group = f.group();
  const std::size_t n = group.size();
  std::vector<double> out(n);
  parallel_for(n, [&](std::size_t x) {
    std::vector<double> terms(n);
    for (std::size_t y = 0; y < n; ++y) {
      terms[y] = f[y] * mu[group.product(group.inverse(y), x)];
    }
    out[x] = pairwise_sum(terms);
  });
  return {group, std::move(out)};
}

GroupFunction coset_smooth(const GroupFunction& f, const GroupTable& subgroup) {
  const auto* table = dynamic_cast<const GroupTable*>(&f.group());
  if (table == nullptr) throw std::invalid_argument("coset_smooth needs a matrix group table");
  const std::size_t n = table->size();
  const double weight = 1.0 / static_cast<double>(subgroup.size());
  std::vector<double> out(n);
  for (std::size_t x = 0; x < n; ++x) {
    double s = 0.0;
    for (std::size_t u = 0; u < subgroup.size(); ++u) {
      const std::size_t y = table->product_across(*table, x, subgroup, subgroup.inverse(u));
      if (y == kNoIndex) throw std::invalid_argument("subgroup is not inside the function's group");
      s += f[y];
    }
    out[x] = s * weight;
  }
  return {*table, std::move(out)};
}

}  // namespace progmix
