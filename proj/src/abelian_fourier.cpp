#include "progmix/abelian_fourier.hpp"

#include <numbers>
#include <stdexcept>

#include "progmix/finite_field.hpp"

namespace progmix {

namespace {

// exp(2 pi i m / n) from a table so every root is evaluated once.
std::vector<Complex> roots(std::size_t n) {
  std::vector<Complex> w(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
    w[m] = {std::cos(angle), std::sin(angle)};
  }
  return w;
}

void require_common_length(std::size_t a, std::size_t b, std::size_t c) {
  if (a == 0 || a != b || a != c) {
    throw std::invalid_argument("abelian functions must share a nonzero length");
  }
}

}  // namespace

Spectrum dft(const AbelianFunction& h) {
  const std::size_t n = h.size();
  const auto w = roots(n);
  Spectrum s{std::vector<Complex>(n)};
  for (std::size_t xi = 0; xi < n; ++xi) {
    Complex acc = 0.0;
    for (std::size_t a = 0; a < n; ++a) acc += h.values[a] * std::conj(w[(xi * a) % n]);
    s.coefficients[xi] = acc / static_cast<double>(n);
  }
  return s;
}

AbelianFunction idft(const Spectrum& s) {
  const std::size_t n = s.size();
  const auto w = roots(n);
  AbelianFunction h{std::vector<Complex>(n)};
  for (std::size_t a = 0; a < n; ++a) {
    Complex acc = 0.0;
    for (std::size_t xi = 0; xi < n; ++xi) acc += s.coefficients[xi] * w[(xi * a) % n];
    h.values[a] = acc;
  }
  return h;
}

double mean_square(const AbelianFunction& h) {
  double s = 0.0;
  for (const auto& v : h.values) s += std::norm(v);
  return s / static_cast<double>(h.size());
}

double spectrum_energy(const Spectrum& s) {
  double e = 0.0;
  for (const auto& c : s.coefficients) e += std::norm(c);
  return e;
}

Complex lambda3_abelian(const AbelianFunction& f0, const AbelianFunction& f1,
                        const AbelianFunction& f2) {
  require_common_length(f0.size(), f1.size(), f2.size());
  const std::size_t n = f0.size();
  Complex acc = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t g = 0; g < n; ++g) {
      acc += f0.values[x] * f1.values[(x + g) % n] * f2.values[(x + 2 * g) % n];
    }
  }
  return acc / static_cast<double>(n * n);
}

Complex lambda3_spectral(const AbelianFunction& f0, const AbelianFunction& f1,
                         const AbelianFunction& f2) {
  require_common_length(f0.size(), f1.size(), f2.size());
  const std::size_t n = f0.size();
  const Spectrum s0 = dft(f0), s1 = dft(f1), s2 = dft(f2);
  Complex acc = 0.0;
  for (std::size_t xi = 0; xi < n; ++xi) {
    const std::size_t minus_two_xi = (n - (2 * xi) % n) % n;
    acc += s0.coefficients[xi] * s1.coefficients[minus_two_xi] * s2.coefficients[xi];
  }
  return acc;
}

IdentityCheck trilinear_identity_check(const AbelianFunction& h1,
                                       const AbelianFunction& h2,
                                       const AbelianFunction& h3, std::int64_t t) {
  require_common_length(h1.size(), h2.size(), h3.size());
  const auto p = static_cast<std::int64_t>(h1.size());
  require_odd_prime(p);
  const std::int64_t tr = modp::reduce(t, p);
  if (tr == 0) throw std::domain_error("trilinear identity needs t != 0");
  const std::int64_t dilation = modp::add(1, modp::mul(tr, tr, p), p);  // 1 + t^2
  const std::int64_t t_inv2 = modp::inv(modp::mul(tr, tr, p), p);      // t^-2
  const std::int64_t second = modp::reduce(-modp::add(1, t_inv2, p), p);

  IdentityCheck out;
  Complex acc = 0.0;
  for (std::int64_t a = 0; a < p; ++a) {
    for (std::int64_t b = 0; b < p; ++b) {
      acc += h1.values[static_cast<std::size_t>(a)] *
             h2.values[static_cast<std::size_t>(modp::add(a, b, p))] *
             h3.values[static_cast<std::size_t>(modp::add(a, modp::mul(dilation, b, p), p))];
    }
  }
  out.lhs = acc / static_cast<double>(p * p);

  const Spectrum s1 = dft(h1), s2 = dft(h2), s3 = dft(h3);
  Complex rhs = 0.0;
  for (std::int64_t xi = 0; xi < p; ++xi) {
    rhs += s1.coefficients[static_cast<std::size_t>(xi)] *
           s2.coefficients[static_cast<std::size_t>(modp::mul(second, xi, p))] *
           s3.coefficients[static_cast<std::size_t>(modp::mul(t_inv2, xi, p))];
  }
  out.rhs = rhs;
  return out;
}

}  // namespace progmix
