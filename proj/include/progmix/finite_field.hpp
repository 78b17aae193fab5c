#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace progmix {

bool is_prime(std::int64_t n);

// Throws std::invalid_argument unless p is an odd prime.
void require_odd_prime(std::int64_t p);

// Residue modulo an odd prime p, kept in [0, p).
class FieldElement {
 public:
  FieldElement(std::int64_t value, std::int64_t modulus);

  std::int64_t value() const { return value_; }
  std::int64_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator-() const;
  FieldElement pow(std::uint64_t e) const;
  // x^(p-2); throws std::domain_error on zero.
  FieldElement inv() const;
  bool is_square() const;

  friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
  // Throws std::domain_error when y is zero.
  friend FieldElement operator/(const FieldElement& x, const FieldElement& y);
  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  std::int64_t value_;
  std::int64_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

enum class FieldOp { kAdd, kSub, kMul, kDiv };

FieldElement field_arith(const FieldElement& x, const FieldElement& y,
                         FieldOp op);
FieldElement inv(const FieldElement& x);
bool is_square(const FieldElement& x);

// Raw residue helpers used by the hot loops; inputs must already be reduced.
namespace modp {

inline std::int64_t reduce(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}
inline std::int64_t add(std::int64_t a, std::int64_t b, std::int64_t p) {
  const std::int64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b, std::int64_t p) {
  const std::int64_t s = a - b;
  return s < 0 ? s + p : s;
}
inline std::int64_t mul(std::int64_t a, std::int64_t b, std::int64_t p) {
  return (a * b) % p;
}
std::int64_t pow(std::int64_t a, std::uint64_t e, std::int64_t p);
std::int64_t inv(std::int64_t a, std::int64_t p);

}  // namespace modp

// Table of squares in F_p: entry v is true iff v is a square (0 included).
std::vector<bool> square_table(std::int64_t p);

}  // namespace progmix
