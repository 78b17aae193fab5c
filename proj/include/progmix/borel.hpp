#pragma once

// Length-4 progressions on the Borel group B of SL_2(F_p), its unipotent
// normal subgroup U, and the Fourier-side quantities that control them.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "progmix/big_rational.hpp"
#include "progmix/error.hpp"
#include "progmix/group_function.hpp"
#include "progmix/matrix_group.hpp"
#include "progmix/mixing_forms.hpp"

namespace progmix {

class BorelContext {
 public:
  explicit BorelContext(std::int64_t p);

  std::int64_t p() const { return p_; }
  const GroupTable& B() const { return b_; }
  const GroupTable& U() const { return u_; }
  // pi of element i of B (bottom-right entry).
  std::int64_t pi_value(std::size_t i) const { return pi_[i]; }
  // Upper-left entry of element i; conjugation by it dilates U by its square.
  std::int64_t upper_left(std::size_t i) const { return ul_[i]; }
  // Index in B of psi(a).
  std::size_t psi_index(std::int64_t a) const {
    return psi_[static_cast<std::size_t>(modp::reduce(a, p_))];
  }
  // Index in B of psi(a) x.
  std::size_t psi_times(std::int64_t a, std::size_t x) const {
    return psi_left_[static_cast<std::size_t>(modp::reduce(a, p_)) * b_.size() + x];
  }
  // Some x in B with pi(x) = t.
  std::size_t with_pi(std::int64_t t) const;

 private:
  std::int64_t p_;
  GroupTable b_;
  GroupTable u_;
  std::vector<std::int64_t> pi_;
  std::vector<std::int64_t> ul_;
  std::vector<std::size_t> psi_;
  std::vector<std::size_t> psi_left_;
};

// f_{x}(a) = f(psi(a) x) for a in F_p.
std::vector<double> fibre_restriction(const BorelContext& ctx, const GroupFunction& f,
                                      std::size_t x);

// Exact E_{x,g in B} prod_{i<4} f_i(x g^i).
MixingResult lambda4_borel(const BorelContext& ctx, std::span<const GroupFunction> fs,
                           std::uint64_t budget = op_budget());

// |lambda4(fs) - lambda4(fs * mu_U)|.
double theorem_fourth_gap(const BorelContext& ctx, std::span<const GroupFunction> fs,
                          std::uint64_t budget = op_budget());

// E_{x,g in B} E_{a,b in F} f_{0,x}(a) f_{1,xg}(a+b) f_{2,xg^2}(a+(1+s)b)
//   f_{3,xg^3}(a+(1+s+s^2)b), with s the square of the upper-left entry of g.
// exact_count is filled for {-1,0,1}-valued inputs and sums over |B|^2 p^2
// terms.
MixingResult rewritten_form(const BorelContext& ctx, std::span<const GroupFunction> fs,
                            std::uint64_t budget = op_budget());

// E_{s,t} sum over xi1 + (1+t^2) xi2 + (1+t^2+t^4) xi3 = 0 with xi_{i0} != 0
// of mu_{1,s}(xi1) mu_{2,st}(xi2) mu_{3,st^2}(xi3), where
// mu_{i,t}(xi) = |f_{i,x}^(xi)|^2 for pi(x) = t.  fs holds f_0..f_3 (f_0 is
// not used).  Throws std::invalid_argument unless i0 is 2 or 3 and f_{i0}
// sums to zero on every coset of U.
double zero_freq_functional(const BorelContext& ctx, std::span<const GroupFunction> fs, int i0);

// max over x of |sum_a f(psi(a) x)|, zero when f is mean-zero on U-cosets.
double coset_mean_defect(const BorelContext& ctx, const GroupFunction& f);

// f - f * mu_U.
GroupFunction coset_mean_zero_part(const BorelContext& ctx, const GroupFunction& f);

// Fraction of (s, t) in (F^x)^2 with
// eta1(s) + (1+t^2) eta2(st) + (1+t^2+t^4) eta3(st^2) = 0.  Each eta is a
// table of length p indexed by residue; entry 0 is ignored.
BigRational sum_product_functional(std::int64_t p, std::span<const std::int64_t> eta1,
                                   std::span<const std::int64_t> eta2,
                                   std::span<const std::int64_t> eta3);

class EliminationConstants {
 public:
  static constexpr int kMinIndex = -1;
  static constexpr int kMaxIndex = 5;

  BigRational r;
  BigRational t;
  BigRational lhs;
  BigRational rhs;

  // j in [kMinIndex, kMaxIndex]; std::out_of_range otherwise.
  const BigRational& alpha(int j) const { return alpha_.at(slot(j)); }
  const BigRational& beta(int j) const { return beta_.at(slot(j)); }
  const BigRational& beta_prime(int j) const { return beta_prime_.at(slot(j)); }

 private:
  friend EliminationConstants elimination_constants(const BigRational&, const BigRational&);
  static std::size_t slot(int j);
  std::vector<BigRational> alpha_, beta_, beta_prime_;
};

// alpha_j = 1 + r^2j t^2, beta_j = 1 + r^2j t^2 + r^4j t^4,
// beta'_j = beta_j - r^2 beta_{j-1}.  Throws std::invalid_argument when
// r is 0 or +-1.
EliminationConstants elimination_constants(const BigRational& r, const BigRational& t);

// (alpha_{j+1} alpha_{j+2} - alpha_{j+3} alpha_j,
//  r^2 (alpha_j alpha_{j+1} - alpha_{j+2} alpha_{j-1})), j in [0, 2].
std::pair<BigRational, BigRational> alpha_identity(const EliminationConstants& c, int j);

// (1 - r^-2)(r^4j t^4 - r^2).
BigRational beta_prime_closed_form(const BigRational& r, const BigRational& t, int j);

struct ConicReport {
  std::int64_t p = 0;
  std::int64_t k = 0;
  std::size_t conic_size = 0;            // |{x^2 + k y^2 = x}|
  std::size_t admissible_u = 0;          // u with 1 + k u^2 != 0
  bool parametrisation_on_conic = true;  // Phi(u) in C for admissible u
  std::size_t max_fibre = 0;             // max |Phi^-1(point)|
  std::size_t max_representations = 0;  // max ordered (c1, c2) with c1 + c2 = z
  std::array<std::int64_t, 2> max_point{};
  // Same maximum with z = (1, 0) left out: C is symmetric about (1/2, 0), so
  // (1, 0) has |C| representations.
  std::size_t max_representations_off_centre = 0;
  std::uint64_t energy = 0;              // |{c1 + c4 = c2 + c3}|
  std::size_t degenerate_t = 0;          // t in F^x with t^4 = -1, skipped
};

// Throws std::invalid_argument when k is 0 or 1 mod p.
ConicReport conic_analysis(std::int64_t p, std::int64_t k);

struct HInvarianceReport {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  double max_difference = 0.0;
};

// Random x, x' = psi(c) x, h, xi: compares |(Delta_h f_x)^(xi)| with
// |(Delta_h f_x')^(xi)|, Delta_h f(a) = f(a) f(a+h).
HInvarianceReport h_invariance_check(const BorelContext& ctx, const GroupFunction& f,
                                     std::uint64_t samples, std::uint64_t seed,
                                     double tolerance = 1e-10);

}  // namespace progmix
