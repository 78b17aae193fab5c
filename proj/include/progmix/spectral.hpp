#pragma once

// Reduced spectral norm ||mu||_S: the operator norm of f -> f * mu on
// mean-zero functions, with averaged L^2 norms on both sides.

#include <cstdint>
#include <optional>
#include <vector>

#include "progmix/group_function.hpp"
#include "progmix/matrix_group.hpp"

namespace progmix {

enum class SpectralMethod { kFullSvd, kPowerIteration };

struct SpectralEstimate {
  double norm = 0.0;
  SpectralMethod method = SpectralMethod::kFullSvd;
  int iterations = 0;
  double residual = 0.0;
};

struct PowerIterationOptions {
  double tolerance = 1e-8;
  int max_iterations = 10000;
  std::uint64_t seed = 7;
};

inline constexpr std::size_t kFullSvdMaxOrder = 5000;

// full_svd: dense |G| x |G| matrix M[x][y] = mu(y^-1 x), constants projected
// out, top singular value.  Throws std::invalid_argument beyond
// kFullSvdMaxOrder.  power_iteration: matrix-free iteration of P M^T M P,
// throws std::runtime_error if the relative residual does not reach the
// tolerance within max_iterations.
SpectralEstimate spectral_norm(const GroupFunction& mu,
                               SpectralMethod method = SpectralMethod::kFullSvd,
                               const PowerIterationOptions& options = {});

enum class QuasirandomProvenance { kConfigured, kClassicalFormula };

struct QuasirandomnessParameter {
  double D = 1.0;
  QuasirandomProvenance provenance = QuasirandomProvenance::kConfigured;

  // Throws std::invalid_argument when D < 1.
  static QuasirandomnessParameter configured(double D);
  // (p - 1) / 2, the minimal nontrivial irreducible degree of SL_2(F_p).
  static QuasirandomnessParameter classical_sl2(std::int64_t p);
};

struct InequalityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin() const { return rhs - lhs; }
  bool holds(double slack = 1e-9) const { return lhs <= rhs + slack; }
};

struct SpectralBoundsReport {
  double norm = 0.0;
  InequalityCheck l1;     // ||mu||_S <= ||mu||_l1
  InequalityCheck l2;     // ||mu||_S <= D^-1/2 |G|^1/2 ||mu||_l2
  InequalityCheck split;  // ||mu||_S <= C0 D^-1/2 + sum_{mu(x) > C0/|G|} mu(x)
  bool all_hold() const { return l1.holds() && l2.holds() && split.holds(); }
};

SpectralBoundsReport check_spectral_bounds(const GroupFunction& mu,
                                           const QuasirandomnessParameter& D,
                                           double C0);

// ||f1 * f2||_L2 <= D^-1/2 |G| ||f1||_L2 ||f2||_L2.  Throws
// std::invalid_argument unless f1 or f2 has mean zero.
InequalityCheck check_bnp_inequality(const GroupFunction& f1, const GroupFunction& f2,
                                     const QuasirandomnessParameter& D);

// lambda*_2(f1, f2) <= D^-1/2 ||f1||_L2 ||f2||_L2, exact lambda*_2.
InequalityCheck check_quasmix(const GroupFunction& f1, const GroupFunction& f2,
                              const QuasirandomnessParameter& D);

// mu~(g) = mu(g^-1) for real mu.
GroupFunction reflect(const GroupFunction& mu);

struct TTStarReport {
  double product_norm = 0.0;  // ||mu * mu~||_S
  double norm_squared = 0.0;  // ||mu||_S^2
  double relative_difference() const;
};

TTStarReport tt_star_check(const GroupFunction& mu);

struct ClassSelector {
  enum class Kind { kUnipotent, kSplitTorus };
  Kind kind = Kind::kUnipotent;
  std::int64_t lambda = 2;  // eigenvalue for kSplitTorus

  static ClassSelector unipotent() { return {}; }
  static ClassSelector split_torus(std::int64_t lambda) {
    return {Kind::kSplitTorus, lambda};
  }
};

// The representative chosen by the selector in SL_2(F_p).
GroupElement class_representative(std::int64_t p, const ClassSelector& selector);

struct ClassExpansionRow {
  std::int64_t p = 0;
  std::size_t group_order = 0;
  std::size_t class_size = 0;
  double norm = 0.0;   // ||1_C||_S
  double ratio = 0.0;  // ||1_C||_S / |C|
};

struct ClassExpansionReport {
  std::vector<ClassExpansionRow> rows;
  // Least-squares slope of log ratio against log p, and c_hat = -slope.
  double slope = 0.0;
  double exponent() const { return -slope; }
};

// Full SVD up to kFullSvdMaxOrder, power iteration beyond.  Throws
// std::invalid_argument when a selected representative is central.
ClassExpansionReport class_expansion(const std::vector<std::int64_t>& primes,
                                     const ClassSelector& selector);

}  // namespace progmix
