#pragma once

// Fourier analysis on Z_n (and F_p viewed additively) with the pairing
// e(xi . a) = exp(2 pi i xi a / n) and the averaged transform
//   H^(xi) = (1/n) sum_a H(a) e(-xi a / n).

#include <complex>
#include <cstdint>
#include <vector>

namespace progmix {

using Complex = std::complex<double>;

struct AbelianFunction {
  std::vector<Complex> values;
  std::size_t size() const { return values.size(); }
};

struct Spectrum {
  std::vector<Complex> coefficients;
  std::size_t size() const { return coefficients.size(); }
};

Spectrum dft(const AbelianFunction& h);
AbelianFunction idft(const Spectrum& s);

// E_a |H(a)|^2 and sum_xi |H^(xi)|^2.
double mean_square(const AbelianFunction& h);
double spectrum_energy(const Spectrum& s);

// E_{x,g} f0(x) f1(x+g) f2(x+2g), by direct summation.
Complex lambda3_abelian(const AbelianFunction& f0, const AbelianFunction& f1,
                        const AbelianFunction& f2);
// sum_xi f0^(xi) f1^(-2 xi) f2^(xi).
Complex lambda3_spectral(const AbelianFunction& f0, const AbelianFunction& f1,
                         const AbelianFunction& f2);

struct IdentityCheck {
  Complex lhs;
  Complex rhs;
  double difference() const { return std::abs(lhs - rhs); }
};

// lhs = E_{a,b} H1(a) H2(a+b) H3(a+(1+t^2) b)
// rhs = sum_xi H1^(xi) H2^(-(1+t^-2) xi) H3^(t^-2 xi)
// over F_p with p = H1.size().  Throws std::domain_error when t = 0 mod p.
IdentityCheck trilinear_identity_check(const AbelianFunction& h1,
                                       const AbelianFunction& h2,
                                       const AbelianFunction& h3, std::int64_t t);

}  // namespace progmix
