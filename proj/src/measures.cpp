#include "progmix/measures.hpp"

#include <cmath>
#include <stdexcept>

#include "progmix/parallel.hpp"
#include "progmix/rng.hpp"

namespace progmix {

namespace {

std::size_t require_index(const GroupTable& table, const GroupElement& x, const char* name) {
  const std::size_t i = table.index_of(x);
  if (i == kNoIndex) throw std::invalid_argument(std::string(name) + " is not in the table");
  return i;
}

double mean_of(const std::vector<double>& xs) {
  return pairwise_sum(xs) / static_cast<double>(xs.size());
}

}  // namespace

Measure::Measure(GroupFunction weights) : weights_(std::move(weights)) {
  for (double w : weights_.values()) {
    if (w < 0.0) throw std::invalid_argument("measure weights must be nonnegative");
  }
  total_mass_ = pairwise_sum(weights_.values());
}

Measure Measure::from_counts(const FiniteGroup& group, const std::vector<std::uint64_t>& counts,
                             std::uint64_t denominator) {
  if (counts.size() != group.size()) throw std::invalid_argument("counts size mismatch");
  std::vector<double> w(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    w[i] = static_cast<double>(counts[i]) / static_cast<double>(denominator);
  }
  return Measure(GroupFunction(group, std::move(w)));
}

std::vector<std::uint64_t> phi_fibre_histogram(const GroupTable& table, const GroupElement& b,
                                               const GroupElement& h, std::uint64_t budget) {
  require_index(table, b, "b");
  const std::size_t hi = table.inverse(require_index(table, h, "h"));
  const GroupTable z = centralizer(table, b);
  const std::size_t n = table.size();
  require_budget("mu_bh histogram", static_cast<std::uint64_t>(n) * z.size() * 5, budget);

  std::vector<std::size_t> c_inv(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) {
    c_inv[k] = table.inverse(table.index_of(z.element(k)));
  }
  // One private histogram row per g, merged in index order.
  std::vector<std::vector<std::size_t>> hits(n);
  parallel_for(n, [&](std::size_t g) {
    const std::size_t gi = table.inverse(g);
    auto& row = hits[g];
    row.resize(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) {
      std::size_t y = table.product(g, c_inv[k]);
      y = table.product(y, hi);
      y = table.product(y, gi);
      y = table.product(y, c_inv[k]);
      row[k] = table.product(y, hi);
    }
  });
  std::vector<std::uint64_t> counts(n, 0);
  for (const auto& row : hits) {
    for (std::size_t y : row) ++counts[y];
  }
  return counts;
}

Measure mu_bh(const GroupTable& table, const GroupElement& b, const GroupElement& h,
              std::uint64_t budget) {
  const auto counts = phi_fibre_histogram(table, b, h, budget);
  const std::uint64_t z = centralizer(table, b).size();
  return Measure::from_counts(table, counts, static_cast<std::uint64_t>(table.size()) * z);
}

double heavy_mass(const Measure& mu, double C0) {
  if (!(C0 >= 1.0)) throw std::invalid_argument("C0 must be >= 1");
  const double threshold = C0 / static_cast<double>(mu.size()) * (1.0 - 1e-12);
  double s = 0.0;
  for (double w : mu.weights().values()) {
    if (w >= threshold) s += w;
  }
  return s;
}

PropGenEstimate prop_gen_rhs(const GroupTable& table, double C0, double D, std::uint64_t samples,
                             std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("prop_gen_rhs needs at least one sample");
  if (!(D >= 1.0)) throw std::invalid_argument("quasirandomness parameter D must be >= 1");
  std::vector<double> heavy(samples);
  // Samples run one after another; each histogram is itself parallel.
  for (std::uint64_t i = 0; i < samples; ++i) {
    Rng rng = substream(seed, i);
    const GroupElement b = table.element(uniform_index(rng, table.size()));
    const GroupElement h = table.element(uniform_index(rng, table.size()));
    heavy[i] = heavy_mass(mu_bh(table, b, h), C0);
  }
  PropGenEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.heavy_mean = mean_of(heavy);
  if (samples > 1) {
    std::vector<double> dev(samples);
    for (std::uint64_t i = 0; i < samples; ++i) {
      dev[i] = (heavy[i] - est.heavy_mean) * (heavy[i] - est.heavy_mean);
    }
    const double var = pairwise_sum(dev) / static_cast<double>(samples - 1);
    est.heavy_se = std::sqrt(var / static_cast<double>(samples));
  }
  const double inner = C0 / std::sqrt(D) + est.heavy_mean;
  est.value = std::pow(inner, 0.25);
  est.standard_error = 0.25 * std::pow(inner, -0.75) * est.heavy_se;
  return est;
}

GroupTable y_set(const GroupTable& table, const GroupElement& b, const GroupElement& h) {
  require_index(table, b, "b");
  require_index(table, h, "h");
  if (!is_regular_semisimple(b)) throw std::invalid_argument("y_set needs b regular semisimple");
  const GroupTable z = centralizer(table, b);
  std::vector<GroupElement> hc;
  std::vector<FieldElement> target;
  for (std::size_t k = 0; k < z.size(); ++k) {
    hc.push_back(mul(h, z.element(k)));
    target.push_back(hc.back().trace());
  }
  std::vector<char> keep(table.size(), 0);
  parallel_for(table.size(), [&](std::size_t i) {
    const GroupElement y = table.element(i);
    for (std::size_t k = 0; k < hc.size(); ++k) {
      if (!(mul(y, hc[k]).trace() == target[k])) return;
    }
    keep[i] = 1;
  });
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (keep[i]) out.push_back(table.element(i));
  }
  return GroupTable(table.dim(), table.modulus(), std::move(out), TableKind::kSubset);
}

ClassAverageReport class_average_identity_check(const GroupTable& table,
                                                const GroupTable& subgroup) {
  const std::size_t n = table.size();
  std::vector<std::size_t> u(subgroup.size());
  for (std::size_t k = 0; k < subgroup.size(); ++k) {
    u[k] = require_index(table, subgroup.element(k), "subgroup element");
  }
  // Left side: integer counts of g u g^-1 over (g, u).
  std::vector<std::uint64_t> counts(n, 0);
  for (std::size_t g = 0; g < n; ++g) {
    const std::size_t gi = table.inverse(g);
    for (std::size_t uk : u) ++counts[table.product(table.product(g, uk), gi)];
  }
  ClassAverageReport r;
  r.lhs.resize(n);
  const double denom = static_cast<double>(n) * static_cast<double>(u.size());
  for (std::size_t y = 0; y < n; ++y) r.lhs[y] = static_cast<double>(counts[y]) / denom;

  r.rhs.assign(n, 0.0);
  for (std::size_t k = 0; k < subgroup.size(); ++k) {
    const GroupTable cls = conjugacy_class(table, subgroup.element(k));
    const double w = 1.0 / (static_cast<double>(u.size()) * static_cast<double>(cls.size()));
    for (std::size_t j = 0; j < cls.size(); ++j) r.rhs[table.index_of(cls.element(j))] += w;
  }
  r.lhs_mass = pairwise_sum(r.lhs);
  r.rhs_mass = pairwise_sum(r.rhs);
  for (std::size_t y = 0; y < n; ++y) {
    r.max_abs_difference = std::max(r.max_abs_difference, std::abs(r.lhs[y] - r.rhs[y]));
  }
  return r;
}

}  // namespace progmix
