#include "clm/poly.hpp"

#include <stdexcept>

namespace clm {

Poly::Poly(Rat constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

Poly Poly::t_power(int k) {
  if (k < 0) throw std::invalid_argument("t_power: negative exponent");
  std::vector<Rat> c(static_cast<size_t>(k) + 1);
  c.back() = 1;
  return Poly(std::move(c));
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

Rat Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
  return c_[static_cast<size_t>(k)];
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::mod_t_pow(int m) const {
  if (m <= 0) return Poly();
  if (degree() < m) return *this;
  return Poly(std::vector<Rat>(c_.begin(), c_.begin() + m));
}

Poly Poly::shifted(int k) const {
  if (is_zero()) return Poly();
  if (k >= 0) {
    std::vector<Rat> c(static_cast<size_t>(k), Rat(0));
    c.insert(c.end(), c_.begin(), c_.end());
    return Poly(std::move(c));
  }
  if (valuation() < -k) throw std::domain_error("shifted: exact division by t^k impossible");
  return Poly(std::vector<Rat>(c_.begin() + (-k), c_.end()));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.c_.size()) c[i] += a.c_[i];
    if (i < b.c_.size()) c[i] += b.c_[i];
  }
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.c_.size()) c[i] += a.c_[i];
    if (i < b.c_.size()) c[i] -= b.c_[i];
  }
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(c));
}

Poly operator*(const Rat& a, const Poly& b) {
  if (a == 0) return Poly();
  std::vector<Rat> c = b.c_;
  for (auto& x : c) x *= a;
  return Poly(std::move(c));
}

Poly mul_mod(const Poly& a, const Poly& b, int m) {
  if (a.is_zero() || b.is_zero() || m <= 0) return Poly();
  std::vector<Rat> c(std::min(static_cast<size_t>(m), a.coeffs().size() + b.coeffs().size() - 1));
  for (size_t i = 0; i < a.coeffs().size() && i < c.size(); ++i) {
    const Rat& ai = a.coeffs()[i];
    if (ai == 0) continue;
    const size_t jmax = std::min(b.coeffs().size(), c.size() - i);
    for (size_t j = 0; j < jmax; ++j) c[i + j] += ai * b.coeffs()[j];
  }
  return Poly(std::move(c));
}

Poly series_quotient(const Poly& a, const Poly& b, int m) {
  if (b.is_zero()) throw std::domain_error("series_quotient: division by zero");
  if (a.is_zero()) return Poly();
  const int vb = b.valuation();
  if (a.valuation() < vb) throw std::domain_error("series_quotient: valuation drops below divisor");
  const Poly ah = a.shifted(-vb);
  const Poly bh = b.shifted(-vb);
  // Solve q * bh = ah coefficientwise: q_k = (ah_k - sum_{i<k} q_i bh_{k-i}) / bh_0.
  const Rat b0 = bh.coeff(0);
  std::vector<Rat> q(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) {
    Rat acc = ah.coeff(k);
    for (int i = 0; i < k; ++i) {
      if (q[static_cast<size_t>(i)] == 0) continue;
      acc -= q[static_cast<size_t>(i)] * bh.coeff(k - i);
    }
    q[static_cast<size_t>(k)] = acc / b0;
  }
  return Poly(std::move(q));
}

}  // namespace clm
