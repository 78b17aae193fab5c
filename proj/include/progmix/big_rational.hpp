#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace progmix {

// Exact rational number with arbitrary-precision numerator and denominator,
// always stored in lowest terms with a positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  BigRational(std::int64_t n, std::int64_t d);
  static BigRational from_string(const std::string& s);

  std::string numerator() const;
  std::string denominator() const;
  std::string str() const;
  double to_double() const;
  int sign() const;
  bool is_integer() const;

  BigRational pow(int e) const;  // negative exponents invert

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& o);
  BigRational& operator-=(const BigRational& o);
  BigRational& operator*=(const BigRational& o);
  BigRational& operator/=(const BigRational& o);  // std::domain_error on 0

  friend BigRational operator+(BigRational a, const BigRational& b) {
    return a += b;
  }
  friend BigRational operator-(BigRational a, const BigRational& b) {
    return a -= b;
  }
  friend BigRational operator*(BigRational a, const BigRational& b) {
    return a *= b;
  }
  friend BigRational operator/(BigRational a, const BigRational& b) {
    return a /= b;
  }
  friend bool operator==(const BigRational& a, const BigRational& b) {
    return a.q_ == b.q_;
  }
  friend bool operator<(const BigRational& a, const BigRational& b) {
    return a.q_ < b.q_;
  }

 private:
  explicit BigRational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

}  // namespace progmix
