#pragma once

#include <vector>

#include "clm/rat.hpp"

namespace clm {

// Univariate polynomial over Q in the degeneration parameter t.
// Coefficients ascend; no trailing zeros are stored (zero = empty list).
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rat constant);
  explicit Poly(std::vector<Rat> coeffs);
  static Poly t_power(int k);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  int valuation() const;                                          // -1 for zero
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int k) const;
  Rat eval(const Rat& x) const;

  // Reduction mod t^m (keeps exponents < m).
  Poly mod_t_pow(int m) const;
  // Multiplication by t^k; negative k divides and requires valuation >= -k.
  Poly shifted(int k) const;

  bool operator==(const Poly&) const = default;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& a, const Poly& b);

 private:
  void normalize();
  std::vector<Rat> c_;
};

Poly mul_mod(const Poly& a, const Poly& b, int m);

// Power-series quotient a / b mod t^m in the local ring at t = 0: requires
// val(b) <= val(a) (and b != 0), so the result is again a polynomial mod t^m.
Poly series_quotient(const Poly& a, const Poly& b, int m);

}  // namespace clm
