#pragma once

#include <cstdint>

namespace qswitch {

// Exact rational with reduced representation. Used where the contract
// demands exact probability arithmetic (e.g. subchannel weights of Pauli
// mixtures given as integer ratios). Desk-scale only: operands stay tiny,
// overflow is checked and throws.
class Fraction {
 public:
  Fraction() : num_(0), den_(1) {}
  Fraction(std::int64_t num, std::int64_t den);
  static Fraction from_int(std::int64_t n) { return Fraction(n, 1); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  Fraction operator+(const Fraction& o) const;
  Fraction operator-(const Fraction& o) const;
  Fraction operator*(const Fraction& o) const;
  Fraction operator/(const Fraction& o) const;
  bool operator==(const Fraction& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator<(const Fraction& o) const;

 private:
  std::int64_t num_;
  std::int64_t den_;  // > 0
};

}  // namespace qswitch
