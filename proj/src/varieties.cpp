#include "progmix/varieties.hpp"

#include <cmath>
#include <stdexcept>

#include "progmix/borel.hpp"
#include "progmix/matrix_group.hpp"

namespace progmix {

double VarietyCount::normalised() const {
  return static_cast<double>(count) / std::pow(static_cast<double>(p), dimension);
}

double VarietyCount::lang_weil_error() const {
  return std::abs(normalised() - components) * std::sqrt(static_cast<double>(p));
}

namespace {

// Some b in SL_2(F_p) with tr(b)^2 - 4 a nonzero (square iff split).
GroupElement torus_generator(std::int64_t p, bool split) {
  for (std::int64_t t = 0; t < p; ++t) {
    const std::int64_t disc = modp::reduce(t * t - 4, p);
    if (disc == 0) continue;
    if (FieldElement(disc, p).is_square() == split) {
      // companion matrix of X^2 - t X + 1
      return GroupElement(2, p, {0, p - 1, 1, t});
    }
  }
  throw std::invalid_argument("no regular semisimple element of the requested type");
}

}  // namespace

std::vector<VarietyCount> variety_counts(std::int64_t p, int d, std::int64_t conic_k,
                                         std::uint64_t budget) {
  require_odd_prime(p);
  if (d != 2 && d != 3) throw std::invalid_argument("d must be 2 or 3");
  const GroupTable g = enumerate_group(d, p, budget);
  std::vector<VarietyCount> out;
  const int dim = d * d - 1;

  VarietyCount sl{"sl", p, d, dim, 1, g.size(), 0.0};
  sl.upper_bound = d * std::pow(static_cast<double>(p), dim);
  out.push_back(sl);

  VarietyCount tr0{"trace_zero", p, d, dim - 1, 1, 0, 0.0};
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.element(i).trace().is_zero()) ++tr0.count;
  }
  tr0.upper_bound = d * std::pow(static_cast<double>(p), dim - 1);
  out.push_back(tr0);

  if (d == 2) {
    if (p > 3) {
      const GroupTable zs = centralizer(g, torus_generator(p, true));
      out.push_back({"split_torus", p, 2, 1, 1, zs.size(), 2.0 * static_cast<double>(p)});
    }
    const GroupTable zn = centralizer(g, torus_generator(p, false));
    out.push_back({"nonsplit_torus", p, 2, 1, 1, zn.size(), 2.0 * static_cast<double>(p)});
  }
  const std::int64_t k = modp::reduce(conic_k, p);
  if (k != 0 && k != 1) {
    const ConicReport c = conic_analysis(p, k);
    out.push_back({"conic", p, d, 1, 1, c.conic_size, 2.0 * static_cast<double>(p)});
  }
  return out;
}

}  // namespace progmix
