#include <gtest/gtest.h>

#include <random>

#include "progmix/abelian_fourier.hpp"

using namespace progmix;

namespace {

AbelianFunction random_function(std::size_t n, std::mt19937_64& rng, bool complex_values = true) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  AbelianFunction f;
  for (std::size_t i = 0; i < n; ++i) f.values.emplace_back(u(rng), complex_values ? u(rng) : 0.0);
  return f;
}

}  // namespace

TEST(AbelianFourier, DeltaAndConstant) {
  AbelianFunction delta;
  delta.values.assign(8, 0.0);
  delta.values[0] = 1.0;
  for (const auto& c : dft(delta).coefficients) EXPECT_NEAR(std::abs(c - Complex(0.125)), 0.0, 1e-15);
  AbelianFunction one;
  one.values.assign(5, 1.0);
  const Spectrum s = dft(one);
  EXPECT_NEAR(std::abs(s.coefficients[0] - Complex(1.0)), 0.0, 1e-14);
  for (std::size_t i = 1; i < 5; ++i) EXPECT_NEAR(std::abs(s.coefficients[i]), 0.0, 1e-14);
}

TEST(AbelianFourier, InversionAndParseval) {
  std::mt19937_64 rng(3);
  for (std::size_t n : {1U, 2U, 7U, 12U, 31U}) {
    const AbelianFunction f = random_function(n, rng);
    const AbelianFunction back = idft(dft(f));
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(std::abs(back.values[i] - f.values[i]), 0.0, 1e-12);
    EXPECT_NEAR(mean_square(f), spectrum_energy(dft(f)), 1e-12);
  }
}

TEST(AbelianFourier, ThreeTermSpectralFormula) {
  std::mt19937_64 rng(5);
  for (std::size_t n : {5U, 7U, 9U, 12U, 13U}) {
    const auto f0 = random_function(n, rng), f1 = random_function(n, rng), f2 = random_function(n, rng);
    EXPECT_NEAR(std::abs(lambda3_abelian(f0, f1, f2) - lambda3_spectral(f0, f1, f2)), 0.0, 1e-12);
  }
  EXPECT_THROW(lambda3_abelian(random_function(3, rng), random_function(4, rng), random_function(3, rng)),
               std::invalid_argument);
}

TEST(AbelianFourier, TrilinearIdentity) {
  std::mt19937_64 rng(11);
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    const auto n = static_cast<std::size_t>(p);
    const auto h1 = random_function(n, rng), h2 = random_function(n, rng), h3 = random_function(n, rng);
    for (std::int64_t t = 1; t < p; ++t) {
      EXPECT_LT(trilinear_identity_check(h1, h2, h3, t).difference(), 1e-12) << "p=" << p << " t=" << t;
    }
    EXPECT_THROW(trilinear_identity_check(h1, h2, h3, p), std::domain_error);
  }
}

TEST(AbelianFourier, TrilinearIdentityDegenerateDilation) {
  // 1 + t^2 = 0 at p = 5, t = 2: the third argument no longer depends on b.
  std::mt19937_64 rng(13);
  const auto h1 = random_function(5, rng), h2 = random_function(5, rng), h3 = random_function(5, rng);
  const IdentityCheck c = trilinear_identity_check(h1, h2, h3, 2);
  EXPECT_LT(c.difference(), 1e-12);
  Complex direct = 0.0, mean2 = 0.0;
  for (int a = 0; a < 5; ++a) {
    direct += h1.values[static_cast<std::size_t>(a)] * h3.values[static_cast<std::size_t>(a)];
    mean2 += h2.values[static_cast<std::size_t>(a)];
  }
  EXPECT_NEAR(std::abs(c.lhs - direct * mean2 / 25.0), 0.0, 1e-12);
}
