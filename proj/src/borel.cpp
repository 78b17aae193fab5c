#include "progmix/borel.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "progmix/abelian_fourier.hpp"
#include "progmix/parallel.hpp"
#include "progmix/rng.hpp"

namespace progmix {

namespace {

void require_four(std::span<const GroupFunction> fs, const BorelContext& ctx) {
  if (fs.size() != 4) throw std::invalid_argument("expected four functions on B");
  for (const auto& f : fs) {
    if (&f.group() != &ctx.B()) throw std::invalid_argument("functions must live on the context's B");
  }
}

bool all_small_integer(std::span<const GroupFunction> fs) {
  for (const auto& f : fs) {
    if (!f.is_small_integer()) return false;
  }
  return true;
}

std::vector<double> power_spectrum(const std::vector<double>& h) {
  AbelianFunction a;
  a.values.assign(h.begin(), h.end());
  const Spectrum s = dft(a);
  std::vector<double> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = std::norm(s.coefficients[i]);
  return out;
}

}  // namespace

BorelContext::BorelContext(std::int64_t p)
    : p_(p), b_(borel_subgroup(p)), u_(unipotent_subgroup(p)) {
  const std::size_t n = b_.size();
  pi_.resize(n);
  ul_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const GroupElement x = b_.element(i);
    pi_[i] = pi(x).value();
    ul_[i] = x.entry(0, 0);
  }
  const auto pu = static_cast<std::size_t>(p);
  psi_.resize(pu);
  for (std::size_t a = 0; a < pu; ++a) {
    psi_[a] = b_.index_of(psi(FieldElement(static_cast<std::int64_t>(a), p)));
  }
  psi_left_.resize(pu * n);
  for (std::size_t a = 0; a < pu; ++a) {
    for (std::size_t x = 0; x < n; ++x) psi_left_[a * n + x] = b_.product(psi_[a], x);
  }
}

std::size_t BorelContext::with_pi(std::int64_t t) const {
  const std::int64_t tt = modp::reduce(t, p_);
  if (tt == 0) throw std::invalid_argument("pi takes values in F^x");
  return b_.index_of(GroupElement::diagonal(p_, modp::inv(tt, p_)));
}

std::vector<double> fibre_restriction(const BorelContext& ctx, const GroupFunction& f,
                                      std::size_t x) {
  std::vector<double> out(static_cast<std::size_t>(ctx.p()));
  for (std::size_t a = 0; a < out.size(); ++a) {
    out[a] = f[ctx.psi_times(static_cast<std::int64_t>(a), x)];
  }
  return out;
}

MixingResult lambda4_borel(const BorelContext& ctx, std::span<const GroupFunction> fs,
                           std::uint64_t budget) {
  require_four(fs, ctx);
  return lambda_k(ctx.B(), fs, budget);
}

double theorem_fourth_gap(const BorelContext& ctx, std::span<const GroupFunction> fs,
                          std::uint64_t budget) {
  require_four(fs, ctx);
  std::vector<GroupFunction> smooth;
  for (const auto& f : fs) smooth.push_back(coset_smooth(f, ctx.U()));
  const double a = lambda_k(ctx.B(), fs, budget).value;
  const double b = lambda_k(ctx.B(), smooth, budget).value;
  return std::abs(a - b);
}

MixingResult rewritten_form(const BorelContext& ctx, std::span<const GroupFunction> fs,
                            std::uint64_t budget) {
  require_four(fs, ctx);
  const std::size_t n = ctx.B().size();
  const auto p = static_cast<std::size_t>(ctx.p());
  require_budget("rewritten_form", static_cast<std::uint64_t>(n) * n * p * p * 4, budget);

  // table[i][y * p + a] = f_i(psi(a) y)
  std::array<std::vector<double>, 4> table;
  for (std::size_t i = 0; i < 4; ++i) {
    table[i].resize(n * p);
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t a = 0; a < p; ++a) {
        table[i][y * p + a] = fs[i][ctx.psi_times(static_cast<std::int64_t>(a), y)];
      }
    }
  }
  const bool integral = all_small_integer(fs);
  std::vector<double> row_sum(n, 0.0);
  std::vector<std::int64_t> row_count(n, 0);
  parallel_for(n, [&](std::size_t x) {
    std::vector<double> per_g(n);
    std::int64_t count = 0;
    for (std::size_t g = 0; g < n; ++g) {
      const std::size_t y1 = ctx.B().product(x, g);
      const std::size_t y2 = ctx.B().product(y1, g);
      const std::size_t y3 = ctx.B().product(y2, g);
      const std::int64_t s = modp::mul(ctx.upper_left(g), ctx.upper_left(g), ctx.p());
      const auto c2 = static_cast<std::size_t>(modp::add(1, s, ctx.p()));
      const auto c3 = static_cast<std::size_t>(
          modp::add(modp::add(1, s, ctx.p()), modp::mul(s, s, ctx.p()), ctx.p()));
      const double* f0 = &table[0][x * p];
      const double* f1 = &table[1][y1 * p];
      const double* f2 = &table[2][y2 * p];
      const double* f3 = &table[3][y3 * p];
      double acc = 0.0;
      for (std::size_t a = 0; a < p; ++a) {
        if (f0[a] == 0.0) continue;
        double inner = 0.0;
        for (std::size_t b = 0; b < p; ++b) {
          inner += f1[(a + b) % p] * f2[(a + c2 * b) % p] * f3[(a + c3 * b) % p];
        }
        acc += f0[a] * inner;
      }
      if (integral) count += std::llround(acc);
      per_g[g] = acc;
    }
    row_sum[x] = pairwise_sum(per_g);
    row_count[x] = count;
  });

  MixingResult r;
  const double denom = static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(p * p);
  if (integral) {
    std::int64_t total = 0;
    for (std::int64_t c : row_count) total += c;
    r.exact_count = total;
    r.value = static_cast<double>(total) / denom;
  } else {
    r.value = pairwise_sum(row_sum) / denom;
  }
  r.lambda_value = r.value;
  double prod = 1.0;
  for (const auto& f : fs) prod *= f.mean();
  r.product_of_means = prod;
  r.deviation = std::abs(r.value - prod);
  return r;
}

double coset_mean_defect(const BorelContext& ctx, const GroupFunction& f) {
  double worst = 0.0;
  for (std::size_t x = 0; x < ctx.B().size(); ++x) {
    const auto h = fibre_restriction(ctx, f, x);
    worst = std::max(worst, std::abs(pairwise_sum(h)));
  }
  return worst;
}

GroupFunction coset_mean_zero_part(const BorelContext& ctx, const GroupFunction& f) {
  return f - coset_smooth(f, ctx.U());
}

double zero_freq_functional(const BorelContext& ctx, std::span<const GroupFunction> fs, int i0) {
  require_four(fs, ctx);
  if (i0 != 2 && i0 != 3) throw std::invalid_argument("i0 must be 2 or 3");
  const GroupFunction& fi0 = fs[static_cast<std::size_t>(i0)];
  if (coset_mean_defect(ctx, fi0) > 1e-9 * std::max(1.0, fi0.linf_norm()) * static_cast<double>(ctx.p())) {
    throw std::invalid_argument("f_" + std::to_string(i0) + " must have mean zero on every coset of U");
  }
  const std::int64_t p = ctx.p();
  const auto pu = static_cast<std::size_t>(p);
  // mu[i][t * p + xi] for i = 1..3, t in F^x
  std::array<std::vector<double>, 4> mu;
  for (std::size_t i = 1; i < 4; ++i) {
    mu[i].assign(pu * pu, 0.0);
    for (std::int64_t t = 1; t < p; ++t) {
      const auto spec = power_spectrum(fibre_restriction(ctx, fs[i], ctx.with_pi(t)));
      for (std::size_t xi = 0; xi < pu; ++xi) mu[i][static_cast<std::size_t>(t) * pu + xi] = spec[xi];
    }
  }
  std::vector<double> per_s(pu - 1, 0.0);
  parallel_for(pu - 1, [&](std::size_t si) {
    const std::int64_t s = static_cast<std::int64_t>(si) + 1;
    std::vector<double> per_t;
    for (std::int64_t t = 1; t < p; ++t) {
      const std::int64_t t2 = modp::mul(t, t, p);
      const std::int64_t c2 = modp::add(1, t2, p);
      const std::int64_t c3 = modp::add(c2, modp::mul(t2, t2, p), p);
      const double* m1 = &mu[1][static_cast<std::size_t>(s) * pu];
      const double* m2 = &mu[2][static_cast<std::size_t>(modp::mul(s, t, p)) * pu];
      const double* m3 = &mu[3][static_cast<std::size_t>(modp::mul(s, t2, p)) * pu];
      double acc = 0.0;
      for (std::int64_t x2 = 0; x2 < p; ++x2) {
        if (i0 == 2 && x2 == 0) continue;
        for (std::int64_t x3 = 0; x3 < p; ++x3) {
          if (i0 == 3 && x3 == 0) continue;
          const std::int64_t x1 =
              modp::reduce(-(modp::mul(c2, x2, p) + modp::mul(c3, x3, p)), p);
          acc += m1[x1] * m2[x2] * m3[x3];
        }
      }
      per_t.push_back(acc);
    }
    per_s[si] = pairwise_sum(per_t);
  });
  const double q = static_cast<double>(p - 1);
  return pairwise_sum(per_s) / (q * q);
}

BigRational sum_product_functional(std::int64_t p, std::span<const std::int64_t> eta1,
                                   std::span<const std::int64_t> eta2,
                                   std::span<const std::int64_t> eta3) {
  require_odd_prime(p);
  const auto pu = static_cast<std::size_t>(p);
  if (eta1.size() != pu || eta2.size() != pu || eta3.size() != pu) {
    throw std::invalid_argument("eta tables must have length p");
  }
  auto at = [&](std::span<const std::int64_t> eta, std::int64_t s) {
    return modp::reduce(eta[static_cast<std::size_t>(s)], p);
  };
  std::int64_t hits = 0;
  for (std::int64_t s = 1; s < p; ++s) {
    for (std::int64_t t = 1; t < p; ++t) {
      const std::int64_t t2 = modp::mul(t, t, p);
      const std::int64_t c2 = modp::add(1, t2, p);
      const std::int64_t c3 = modp::add(c2, modp::mul(t2, t2, p), p);
      std::int64_t v = at(eta1, s);
      v = modp::add(v, modp::mul(c2, at(eta2, modp::mul(s, t, p)), p), p);
      v = modp::add(v, modp::mul(c3, at(eta3, modp::mul(s, t2, p)), p), p);
      if (v == 0) ++hits;
    }
  }
  return BigRational(hits, (p - 1) * (p - 1));
}

std::size_t EliminationConstants::slot(int j) {
  if (j < kMinIndex || j > kMaxIndex) {
    throw std::out_of_range("index " + std::to_string(j) + " outside [-1, 5]");
  }
  return static_cast<std::size_t>(j - kMinIndex);
}

EliminationConstants elimination_constants(const BigRational& r, const BigRational& t) {
  if (r == BigRational(0) || r == BigRational(1) || r == BigRational(-1)) {
    throw std::invalid_argument("elimination constants need r not in {0, 1, -1}");
  }
  EliminationConstants c;
  c.r = r;
  c.t = t;
  const BigRational t2 = t * t;
  const BigRational t4 = t2 * t2;
  const BigRational r2 = r * r;
  auto beta = [&](int j) { return BigRational(1) + r.pow(2 * j) * t2 + r.pow(4 * j) * t4; };
  for (int j = EliminationConstants::kMinIndex; j <= EliminationConstants::kMaxIndex; ++j) {
    c.alpha_.push_back(BigRational(1) + r.pow(2 * j) * t2);
    c.beta_.push_back(beta(j));
    c.beta_prime_.push_back(beta(j) - r2 * beta(j - 1));
  }
  auto a = [&](int j) { return c.alpha(j); };
  auto b = [&](int j) { return c.beta_prime(j); };
  c.lhs = (b(0) * b(4) * a(1) * a(2) - b(1) * b(3) * a(0) * a(3)) *
          (b(2) * b(5) * a(2) * a(3) + b(3) * b(5) * a(1) * a(2) - b(3) * b(4) * a(1) * a(3) -
           b(4) * b(4) * a(1) * a(2));
  c.rhs = (b(1) * b(5) * a(2) * a(3) - b(2) * b(4) * a(1) * a(4)) *
          (b(1) * b(4) * a(1) * a(2) + b(2) * b(4) * a(0) * a(1) - b(2) * b(3) * a(0) * a(3) -
           b(3) * b(3) * a(0) * a(1));
  return c;
}

std::pair<BigRational, BigRational> alpha_identity(const EliminationConstants& c, int j) {
  if (j < 0 || j > 2) throw std::out_of_range("alpha identity needs j in [0, 2]");
  auto a = [&](int i) { return c.alpha(i); };
  return {a(j + 1) * a(j + 2) - a(j + 3) * a(j),
          c.r * c.r * (a(j) * a(j + 1) - a(j + 2) * a(j - 1))};
}

BigRational beta_prime_closed_form(const BigRational& r, const BigRational& t, int j) {
  const BigRational t2 = t * t;
  return (BigRational(1) - r.pow(-2)) * (r.pow(4 * j) * t2 * t2 - r * r);
}

ConicReport conic_analysis(std::int64_t p, std::int64_t k) {
  require_odd_prime(p);
  const std::int64_t kk = modp::reduce(k, p);
  if (kk == 0 || kk == 1) throw std::invalid_argument("conic needs k not in {0, 1}");
  ConicReport r;
  r.p = p;
  r.k = kk;
  const auto pu = static_cast<std::size_t>(p);
  std::vector<std::array<std::int64_t, 2>> pts;
  std::vector<char> on(pu * pu, 0);
  for (std::int64_t x = 0; x < p; ++x) {
    for (std::int64_t y = 0; y < p; ++y) {
      if (modp::add(modp::mul(x, x, p), modp::mul(kk, modp::mul(y, y, p), p), p) == x) {
        pts.push_back({x, y});
        on[static_cast<std::size_t>(x) * pu + static_cast<std::size_t>(y)] = 1;
      }
    }
  }
  r.conic_size = pts.size();

  std::vector<std::size_t> fibre(pu * pu, 0);
  for (std::int64_t u = 0; u < p; ++u) {
    const std::int64_t w = modp::add(1, modp::mul(kk, modp::mul(u, u, p), p), p);
    if (w == 0) continue;
    ++r.admissible_u;
    const std::int64_t wi = modp::inv(w, p);
    const std::size_t idx = static_cast<std::size_t>(wi) * pu + static_cast<std::size_t>(modp::mul(u, wi, p));
    if (!on[idx]) r.parametrisation_on_conic = false;
    r.max_fibre = std::max(r.max_fibre, ++fibre[idx]);
  }

  std::vector<std::uint64_t> reps(pu * pu, 0);
  for (const auto& c1 : pts) {
    for (const auto& c2 : pts) {
      ++reps[static_cast<std::size_t>(modp::add(c1[0], c2[0], p)) * pu +
             static_cast<std::size_t>(modp::add(c1[1], c2[1], p))];
    }
  }
  const std::size_t centre = pu;  // (1, 0)
  for (std::size_t z = 0; z < reps.size(); ++z) {
    r.energy += reps[z] * reps[z];
    if (reps[z] > r.max_representations) {
      r.max_representations = reps[z];
      r.max_point = {static_cast<std::int64_t>(z / pu), static_cast<std::int64_t>(z % pu)};
    }
    if (z != centre) r.max_representations_off_centre = std::max<std::size_t>(r.max_representations_off_centre, reps[z]);
  }
  for (std::int64_t t = 1; t < p; ++t) {
    if (modp::pow(t, 4, p) == p - 1) ++r.degenerate_t;
  }
  return r;
}

HInvarianceReport h_invariance_check(const BorelContext& ctx, const GroupFunction& f,
                                     std::uint64_t samples, std::uint64_t seed, double tolerance) {
  if (&f.group() != &ctx.B()) throw std::invalid_argument("function must live on the context's B");
  const std::int64_t p = ctx.p();
  const auto pu = static_cast<std::size_t>(p);
  HInvarianceReport rep;
  auto modulus = [&](std::size_t x, std::size_t h, std::size_t xi) {
    const auto fx = fibre_restriction(ctx, f, x);
    AbelianFunction d;
    d.values.resize(pu);
    for (std::size_t a = 0; a < pu; ++a) d.values[a] = fx[a] * fx[(a + h) % pu];
    return std::abs(dft(d).coefficients[xi]);
  };
  for (std::uint64_t i = 0; i < samples; ++i) {
    Rng rng = substream(seed, i);
    const std::size_t x = uniform_index(rng, ctx.B().size());
    const auto c = static_cast<std::int64_t>(uniform_index(rng, pu));
    const std::size_t h = uniform_index(rng, pu);
    const std::size_t xi = uniform_index(rng, pu);
    const double diff = std::abs(modulus(x, h, xi) - modulus(ctx.psi_times(c, x), h, xi));
    ++rep.trials;
    if (diff > tolerance) ++rep.failures;
    rep.max_difference = std::max(rep.max_difference, diff);
  }
  return rep;
}

}  // namespace progmix
