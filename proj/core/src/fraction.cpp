#include "qswitch/fraction.hpp"

#include <numeric>
#include <stdexcept>

namespace qswitch {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("Fraction: multiplication overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("Fraction: addition overflow");
  return out;
}

}  // namespace

Fraction::Fraction(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw std::invalid_argument("Fraction: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Fraction Fraction::operator+(const Fraction& o) const {
  return Fraction(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                  checked_mul(den_, o.den_));
}

Fraction Fraction::operator-(const Fraction& o) const {
  return *this + Fraction(-o.num_, o.den_);
}

Fraction Fraction::operator*(const Fraction& o) const {
  return Fraction(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
}

Fraction Fraction::operator/(const Fraction& o) const {
  if (o.num_ == 0) throw std::invalid_argument("Fraction: division by zero");
  return Fraction(checked_mul(num_, o.den_), checked_mul(den_, o.num_));
}

bool Fraction::operator<(const Fraction& o) const {
  return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
}

}  // namespace qswitch
