#include "progmix/big_rational.hpp"

#include <stdexcept>

namespace progmix {

BigRational::BigRational(std::int64_t n) : q_(static_cast<long>(n)) {}

BigRational::BigRational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("BigRational with zero denominator");
  q_ = mpq_class(mpz_class(static_cast<long>(n)),
                 mpz_class(static_cast<long>(d)));
  q_.canonicalize();
}

BigRational BigRational::from_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("not a rational number: " + s);
  }
  q.canonicalize();
  return BigRational(q);
}

std::string BigRational::numerator() const { return q_.get_num().get_str(); }
std::string BigRational::denominator() const { return q_.get_den().get_str(); }
std::string BigRational::str() const { return q_.get_str(); }
double BigRational::to_double() const { return q_.get_d(); }
int BigRational::sign() const { return sgn(q_); }
bool BigRational::is_integer() const { return q_.get_den() == 1; }

BigRational BigRational::pow(int e) const {
  if (e < 0) {
    if (sign() == 0) throw std::domain_error("zero to a negative power");
    return BigRational(1) / pow(-e);
  }
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  mpq_class r(num, den);
  r.canonicalize();
  return BigRational(r);
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-q_)); }

BigRational& BigRational::operator+=(const BigRational& o) {
  q_ += o.q_;
  return *this;
}
BigRational& BigRational::operator-=(const BigRational& o) {
  q_ -= o.q_;
  return *this;
}
BigRational& BigRational::operator*=(const BigRational& o) {
  q_ *= o.q_;
  return *this;
}
BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.sign() == 0) throw std::domain_error("BigRational division by zero");
  q_ /= o.q_;
  return *this;
}

}  // namespace progmix
