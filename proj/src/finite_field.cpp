#include "progmix/finite_field.hpp"

#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>

#include "progmix/error.hpp"

namespace progmix {

std::uint64_t op_budget(std::uint64_t fallback) {
  const char* env = std::getenv("PROGMIX_BUDGET");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) {
    throw std::invalid_argument(std::string("PROGMIX_BUDGET is not a positive integer: ") + env);
  }
  return v;
}

void require_budget(const std::string& what, std::uint64_t required,
                    std::uint64_t budget) {
  if (required > budget) throw BudgetExceeded(what, required, budget);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

void require_odd_prime(std::int64_t p) {
  if (p == 2 || !is_prime(p)) {
    throw std::invalid_argument("modulus must be an odd prime, got " +
                                std::to_string(p));
  }
}

namespace modp {

std::int64_t pow(std::int64_t a, std::uint64_t e, std::int64_t p) {
  std::int64_t result = 1 % p;
  std::int64_t base = reduce(a, p);
  while (e > 0) {
    if (e & 1U) result = mul(result, base, p);
    base = mul(base, base, p);
    e >>= 1U;
  }
  return result;
}

std::int64_t inv(std::int64_t a, std::int64_t p) {
  if (reduce(a, p) == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(a, static_cast<std::uint64_t>(p - 2), p);
}

}  // namespace modp

FieldElement::FieldElement(std::int64_t value, std::int64_t modulus)
    : value_(0), modulus_(modulus) {
  require_odd_prime(modulus);
  value_ = modp::reduce(value, modulus);
}

namespace {

void require_same_field(const FieldElement& x, const FieldElement& y) {
  if (x.modulus() != y.modulus()) {
    throw std::invalid_argument("field modulus mismatch: " +
                                std::to_string(x.modulus()) + " vs " +
                                std::to_string(y.modulus()));
  }
}

}  // namespace

FieldElement FieldElement::operator-() const {
  return {modp::sub(0, value_, modulus_), modulus_};
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  return {modp::pow(value_, e, modulus_), modulus_};
}

FieldElement FieldElement::inv() const {
  if (value_ == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(static_cast<std::uint64_t>(modulus_ - 2));
}

bool FieldElement::is_square() const {
  if (value_ == 0) return true;
  // Euler's criterion.
  return modp::pow(value_, static_cast<std::uint64_t>((modulus_ - 1) / 2),
                   modulus_) == 1;
}

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
  require_same_field(x, y);
  return {modp::add(x.value_, y.value_, x.modulus_), x.modulus_};
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) {
  require_same_field(x, y);
  return {modp::sub(x.value_, y.value_, x.modulus_), x.modulus_};
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  require_same_field(x, y);
  return {modp::mul(x.value_, y.value_, x.modulus_), x.modulus_};
}

FieldElement operator/(const FieldElement& x, const FieldElement& y) {
  require_same_field(x, y);
  if (y.is_zero()) throw std::domain_error("division by zero in F_p");
  return x * y.inv();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) {
  return os << x.value() << " (mod " << x.modulus() << ")";
}

FieldElement field_arith(const FieldElement& x, const FieldElement& y,
                         FieldOp op) {
  switch (op) {
    case FieldOp::kAdd:
      return x + y;
    case FieldOp::kSub:
      return x - y;
    case FieldOp::kMul:
      return x * y;
    case FieldOp::kDiv:
      return x / y;
  }
  throw std::invalid_argument("unknown field operation");
}

FieldElement inv(const FieldElement& x) { return x.inv(); }

bool is_square(const FieldElement& x) { return x.is_square(); }

std::vector<bool> square_table(std::int64_t p) {
  std::vector<bool> table(static_cast<std::size_t>(p), false);
  for (std::int64_t y = 0; y < p; ++y) {
    table[static_cast<std::size_t>(modp::mul(y, y, p))] = true;
  }
  return table;
}

}  // namespace progmix
