#include "progmix/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>
#include <string>

#include "progmix/mixing_forms.hpp"
#include "progmix/parallel.hpp"
#include "progmix/rng.hpp"

namespace progmix {

namespace {

// Nonzero entries of mu as (position, weight).
std::vector<std::pair<std::size_t, double>> support(const GroupFunction& mu) {
  std::vector<std::pair<std::size_t, double>> s;
  for (std::size_t z = 0; z < mu.size(); ++z) {
    if (mu[z] != 0.0) s.emplace_back(z, mu[z]);
  }
  return s;
}

void project_mean_zero(std::vector<double>& v) {
  const double m = pairwise_sum(v) / static_cast<double>(v.size());
  for (double& x : v) x -= m;
}

double norm2(const std::vector<double>& v) {
  std::vector<double> sq(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) sq[i] = v[i] * v[i];
  return std::sqrt(pairwise_sum(sq));
}

SpectralEstimate full_svd(const GroupFunction& mu) {
  const FiniteGroup& g = mu.group();
  const std::size_t n = g.size();
  if (n > kFullSvdMaxOrder) {
    throw std::invalid_argument("full_svd supports groups of order <= " +
                                std::to_string(kFullSvdMaxOrder) + ", got " + std::to_string(n));
  }
  Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  parallel_for(n, [&](std::size_t y) {
    const std::size_t yi = g.inverse(y);
    for (std::size_t x = 0; x < n; ++x) {
      m(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) = mu[g.product(yi, x)];
    }
  });
  // M P with P = I - J/n: subtract each row's mean.
  const Eigen::VectorXd row_mean = m.rowwise().mean();
  m.colwise() -= row_mean;
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  SpectralEstimate est;
  est.method = SpectralMethod::kFullSvd;
  est.norm = svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
  return est;
}

SpectralEstimate power_iteration(const GroupFunction& mu, const PowerIterationOptions& opt) {
  const FiniteGroup& g = mu.group();
  const std::size_t n = g.size();
  const auto supp = support(mu);
  std::vector<std::size_t> inv_supp(supp.size());
  for (std::size_t k = 0; k < supp.size(); ++k) inv_supp[k] = g.inverse(supp[k].first);

  // (M f)(x) = sum_z f(x z^-1) mu(z);  (M^T h)(y) = sum_z h(y z) mu(z).
  auto apply_m = [&](const std::vector<double>& f, std::vector<double>& out) {
    parallel_for(n, [&](std::size_t x) {
      double s = 0.0;
      for (std::size_t k = 0; k < supp.size(); ++k) s += f[g.product(x, inv_supp[k])] * supp[k].second;
      out[x] = s;
    });
  };
  auto apply_mt = [&](const std::vector<double>& h, std::vector<double>& out) {
    parallel_for(n, [&](std::size_t y) {
      double s = 0.0;
      for (const auto& [z, w] : supp) s += h[g.product(y, z)] * w;
      out[y] = s;
    });
  };

  SpectralEstimate est;
  est.method = SpectralMethod::kPowerIteration;
  Rng rng = substream(opt.seed, 0);
  std::normal_distribution<double> gauss;
  std::vector<double> v(n), mv(n), av(n);
  for (double& x : v) x = gauss(rng);
  project_mean_zero(v);
  double vn = norm2(v);
  for (double& x : v) x /= vn;

  double lambda = 0.0;
  for (int it = 1; it <= opt.max_iterations; ++it) {
    apply_m(v, mv);
    apply_mt(mv, av);
    project_mean_zero(av);
    double dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) dot += v[i] * av[i];
    lambda = dot;
    const double an = norm2(av);
    est.iterations = it;
    if (an < 1e-300 || an < 1e-14 * std::max(1.0, mu.l1_sum() * mu.l1_sum())) {
      est.norm = 0.0;
      est.residual = 0.0;
      return est;
    }
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = av[i] - lambda * v[i];
    est.residual = norm2(r) / std::abs(lambda);
    for (std::size_t i = 0; i < n; ++i) v[i] = av[i] / an;
    if (est.residual <= opt.tolerance) {
      est.norm = std::sqrt(std::max(lambda, 0.0));
      return est;
    }
  }
  throw std::runtime_error("power iteration did not converge: residual " +
                           std::to_string(est.residual) + " after " +
                           std::to_string(opt.max_iterations) + " iterations");
}

}  // namespace

SpectralEstimate spectral_norm(const GroupFunction& mu, SpectralMethod method,
                               const PowerIterationOptions& options) {
  return method == SpectralMethod::kFullSvd ? full_svd(mu) : power_iteration(mu, options);
}

QuasirandomnessParameter QuasirandomnessParameter::configured(double D) {
  if (!(D >= 1.0)) throw std::invalid_argument("quasirandomness parameter D must be >= 1");
  return {D, QuasirandomProvenance::kConfigured};
}

QuasirandomnessParameter QuasirandomnessParameter::classical_sl2(std::int64_t p) {
  require_odd_prime(p);
  return {static_cast<double>(p - 1) / 2.0, QuasirandomProvenance::kClassicalFormula};
}

SpectralBoundsReport check_spectral_bounds(const GroupFunction& mu,
                                           const QuasirandomnessParameter& D, double C0) {
  if (!(C0 >= 1.0)) throw std::invalid_argument("C0 must be >= 1");
  const double n = static_cast<double>(mu.size());
  SpectralBoundsReport r;
  r.norm = spectral_norm(mu).norm;
  const double d_half = 1.0 / std::sqrt(D.D);
  r.l1 = {r.norm, mu.l1_sum()};
  r.l2 = {r.norm, d_half * std::sqrt(n) * mu.l2_sum()};
  double heavy = 0.0;
  for (double w : mu.values()) {
    if (w > C0 / n) heavy += w;
  }
  r.split = {r.norm, C0 * d_half + heavy};
  return r;
}

InequalityCheck check_bnp_inequality(const GroupFunction& f1, const GroupFunction& f2,
                                     const QuasirandomnessParameter& D) {
  require_same_group(f1, f2);
  auto mean_zero = [](const GroupFunction& f) {
    return std::abs(f.mean()) <= 1e-12 * std::max(1.0, f.linf_norm());
  };
  if (!mean_zero(f1) && !mean_zero(f2)) {
    throw std::invalid_argument("BNP inequality needs f1 or f2 to have mean zero");
  }
  const double n = static_cast<double>(f1.size());
  return {convolve(f1, f2).l2_norm(), n / std::sqrt(D.D) * f1.l2_norm() * f2.l2_norm()};
}

InequalityCheck check_quasmix(const GroupFunction& f1, const GroupFunction& f2,
                              const QuasirandomnessParameter& D) {
  require_same_group(f1, f2);
  const GroupFunction fs[] = {f1, f2};
  const MixingResult r = lambda_star_k(f1.group(), fs);
  return {r.value, f1.l2_norm() * f2.l2_norm() / std::sqrt(D.D)};
}

GroupFunction reflect(const GroupFunction& mu) {
  const FiniteGroup& g = mu.group();
  std::vector<double> v(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) v[x] = mu[g.inverse(x)];
  return {g, std::move(v)};
}

double TTStarReport::relative_difference() const {
  const double scale = std::max(std::abs(norm_squared), 1e-300);
  if (norm_squared == 0.0 && product_norm == 0.0) return 0.0;
  return std::abs(product_norm - norm_squared) / scale;
}

TTStarReport tt_star_check(const GroupFunction& mu) {
  TTStarReport r;
  const double s = spectral_norm(mu).norm;
  r.norm_squared = s * s;
  r.product_norm = spectral_norm(convolve(mu, reflect(mu))).norm;
  return r;
}

GroupElement class_representative(std::int64_t p, const ClassSelector& selector) {
  if (selector.kind == ClassSelector::Kind::kUnipotent) return psi(FieldElement(1, p));
  const std::int64_t l = modp::reduce(selector.lambda, p);
  if (l == 0) throw std::invalid_argument("split torus eigenvalue must be nonzero");
  return GroupElement::diagonal(p, l);
}

ClassExpansionReport class_expansion(const std::vector<std::int64_t>& primes,
                                     const ClassSelector& selector) {
  ClassExpansionReport report;
  for (std::int64_t p : primes) {
    const GroupElement a = class_representative(p, selector);
    if (a.is_central()) {
      throw std::invalid_argument("class_expansion needs a non-central element (p = " +
                                  std::to_string(p) + ")");
    }
    const GroupTable g = enumerate_group(2, p);
    const GroupTable cls = conjugacy_class(g, a);
    std::vector<std::size_t> members(cls.size());
    for (std::size_t i = 0; i < cls.size(); ++i) members[i] = g.index_of(cls.element(i));
    const GroupFunction indicator = GroupFunction::indicator(g, members);
    ClassExpansionRow row;
    row.p = p;
    row.group_order = g.size();
    row.class_size = cls.size();
    row.norm = spectral_norm(indicator, g.size() <= kFullSvdMaxOrder ? SpectralMethod::kFullSvd
                                                                    : SpectralMethod::kPowerIteration)
                   .norm;
    row.ratio = row.norm / static_cast<double>(cls.size());
    report.rows.push_back(row);
  }
  if (report.rows.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(report.rows.size());
    for (const auto& row : report.rows) {
      const double x = std::log(static_cast<double>(row.p));
      const double y = std::log(row.ratio);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    report.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  }
  return report;
}

}  // namespace progmix
