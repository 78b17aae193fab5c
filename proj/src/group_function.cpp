#include "progmix/group_function.hpp"

#include <cmath>
#include <stdexcept>

#include "progmix/parallel.hpp"

namespace progmix {

GroupFunction::GroupFunction(const FiniteGroup& group, std::vector<double> values)
    : group_(&group), values_(std::move(values)) {
  if (values_.size() != group.size()) {
    throw std::invalid_argument("group function length differs from group order");
  }
}

GroupFunction GroupFunction::zeros(const FiniteGroup& group) {
  return {group, std::vector<double>(group.size(), 0.0)};
}

GroupFunction GroupFunction::constant(const FiniteGroup& group, double c) {
  return {group, std::vector<double>(group.size(), c)};
}

GroupFunction GroupFunction::delta(const FiniteGroup& group, std::size_t at) {
  GroupFunction f = zeros(group);
  f.values_.at(at) = 1.0;
  return f;
}

GroupFunction GroupFunction::indicator(const FiniteGroup& group,
                                       std::span<const std::size_t> members) {
  GroupFunction f = zeros(group);
  for (std::size_t i : members) f.values_.at(i) = 1.0;
  return f;
}

GroupFunction GroupFunction::uniform(const FiniteGroup& group) {
  return constant(group, 1.0 / static_cast<double>(group.size()));
}

double GroupFunction::sum() const { return pairwise_sum(values_); }

double GroupFunction::mean() const { return sum() / static_cast<double>(size()); }

double GroupFunction::l2_norm() const {
  return std::sqrt(l2_sum() * l2_sum() / static_cast<double>(size()));
}

double GroupFunction::linf_norm() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double GroupFunction::l1_sum() const {
  std::vector<double> a(values_.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::abs(values_[i]);
  return pairwise_sum(a);
}

double GroupFunction::l2_sum() const {
  std::vector<double> a(values_.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = values_[i] * values_[i];
  return std::sqrt(pairwise_sum(a));
}

bool GroupFunction::is_small_integer() const {
  for (double v : values_) {
    if (v != 0.0 && v != 1.0 && v != -1.0) return false;
  }
  return true;
}

GroupFunction GroupFunction::minus_mean() const {
  const double m = mean();
  GroupFunction f = *this;
  for (double& v : f.values_) v -= m;
  return f;
}

GroupFunction GroupFunction::scaled(double c) const {
  GroupFunction f = *this;
  for (double& v : f.values_) v *= c;
  return f;
}

void require_same_group(const GroupFunction& a, const GroupFunction& b) {
  if (&a.group() != &b.group()) {
    throw std::invalid_argument("group functions live on different tables");
  }
}

GroupFunction operator+(const GroupFunction& a, const GroupFunction& b) {
  require_same_group(a, b);
  GroupFunction f = a;
  for (std::size_t i = 0; i < f.size(); ++i) f.values_[i] += b.values_[i];
  return f;
}

GroupFunction operator-(const GroupFunction& a, const GroupFunction& b) {
  return a + b.scaled(-1.0);
}

GroupFunction random_sign(const FiniteGroup& group, Rng& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<double> v(group.size());
  for (double& x : v) x = coin(rng) ? 1.0 : -1.0;
  return {group, std::move(v)};
}

GroupFunction random_uniform(const FiniteGroup& group, Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(group.size());
  for (double& x : v) x = dist(rng);
  return {group, std::move(v)};
}

GroupFunction random_indicator(const FiniteGroup& group, Rng& rng, double density) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("indicator density must lie in [0, 1]");
  }
  std::bernoulli_distribution coin(density);
  std::vector<double> v(group.size());
  for (double& x : v) x = coin(rng) ? 1.0 : 0.0;
  return {group, std::move(v)};
}

GroupFunction random_probability(const FiniteGroup& group, Rng& rng) {
  std::exponential_distribution<double> dist(1.0);
  std::vector<double> v(group.size());
  for (double& x : v) x = dist(rng);
  const double total = pairwise_sum(v);
  for (double& x : v) x /= total;
  return {group, std::move(v)};
}

GroupFunction random_coset_indicator(const GroupTable& group,
                                     const GroupTable& subgroup, Rng& rng) {
  const std::size_t g = uniform_index(rng, group.size());
  const double density =
      static_cast<double>(subgroup.size()) / static_cast<double>(group.size());
  GroupFunction f = GroupFunction::constant(group, -density);
  for (std::size_t h = 0; h < subgroup.size(); ++h) {
    const std::size_t x = group.product_across(group, g, subgroup, h);
    if (x == kNoIndex) throw std::invalid_argument("subgroup is not inside the group");
    f[x] += 1.0;
  }
  return f;
}

}  // namespace progmix
