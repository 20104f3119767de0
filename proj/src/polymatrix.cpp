#include "clm/polymatrix.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace clm {

PolyMatrix::PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("matrix with negative shape");
}

PolyMatrix PolyMatrix::constant(const RatMatrix& m) {
  PolyMatrix p(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) p.at(r, c) = Poly(m.at(r, c));
  return p;
}

bool PolyMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

RatMatrix PolyMatrix::coefficient(int k) const {
  RatMatrix m(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c).coeff(k);
  return m;
}

RatMatrix PolyMatrix::eval(const Rat& x) const {
  RatMatrix m(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c).eval(x);
  return m;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

PolyMatrix PolyMatrix::select(const std::vector<int>& rows, const std::vector<int>& cols) const {
  PolyMatrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) s.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
  return s;
}

PolyMatrix PolyMatrix::scaled_by_t(int k) const {
  PolyMatrix s(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) s.at(r, c) = at(r, c).shifted(k);
  return s;
}

PolyMatrix PolyMatrix::mod_t_pow(int m) const {
  PolyMatrix s(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) s.at(r, c) = at(r, c).mod_t_pow(m);
  return s;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  PolyMatrix m(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r)
    for (int k = 0; k < a.cols_; ++k) {
      const Poly& x = a.at(r, k);
      if (x.is_zero()) continue;
      for (int c = 0; c < b.cols_; ++c) {
        if (b.at(k, c).is_zero()) continue;
        m.at(r, c) = m.at(r, c) + x * b.at(k, c);
      }
    }
  return m;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  PolyMatrix m(a.rows_, a.cols_);
  for (size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] + b.e_[i];
  return m;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  PolyMatrix m(a.rows_, a.cols_);
  for (size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] - b.e_[i];
  return m;
}

int entry_valuation(const PolyMatrix& m) {
  int best = INT_MAX;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      const int v = m.at(r, c).valuation();
      if (v >= 0 && v < best) best = v;
    }
  if (best == INT_MAX) throw std::domain_error("entry_valuation: matrix is identically zero");
  return best;
}

int smith_truncation_bound(const PolyMatrix& m) {
  long row_sum = 0, col_sum = 0;
  for (int r = 0; r < m.rows(); ++r) {
    int mx = 0;
    for (int c = 0; c < m.cols(); ++c) mx = std::max(mx, m.at(r, c).degree());
    row_sum += mx;
  }
  for (int c = 0; c < m.cols(); ++c) {
    int mx = 0;
    for (int r = 0; r < m.rows(); ++r) mx = std::max(mx, m.at(r, c).degree());
    col_sum += mx;
  }
  return static_cast<int>(std::min(row_sum, col_sum)) + 1;
}

std::vector<int> local_smith_exponents(const PolyMatrix& m0) {
  if (m0.rows() == 0 || m0.cols() == 0) return {};
  const int cap = smith_truncation_bound(m0);
  PolyMatrix m = m0.mod_t_pow(cap);
  std::vector<bool> row_done(m.rows(), false), col_done(m.cols(), false);
  std::vector<int> exps;
  while (true) {
    int pr = -1, pc = -1, pv = INT_MAX;
    for (int r = 0; r < m.rows(); ++r) {
      if (row_done[r]) continue;
      for (int c = 0; c < m.cols(); ++c) {
        if (col_done[c]) continue;
        const int v = m.at(r, c).valuation();
        if (v >= 0 && v < pv) {
          pv = v;
          pr = r;
          pc = c;
        }
      }
    }
    if (pr < 0) break;
    exps.push_back(pv);
    // The pivot has minimal valuation in the active block, so every other
    // entry of its column divides by it in the local ring; one round of row
    // operations isolates the pivot (column operations would then only touch
    // the pivot row itself and can be skipped).
    for (int r = 0; r < m.rows(); ++r) {
      if (row_done[r] || r == pr || m.at(r, pc).is_zero()) continue;
      const Poly f = series_quotient(m.at(r, pc), m.at(pr, pc), cap);
      for (int c = 0; c < m.cols(); ++c) {
        if (col_done[c]) continue;
        m.at(r, c) = m.at(r, c) - mul_mod(f, m.at(pr, c), cap);
      }
      m.at(r, pc) = Poly();
    }
    row_done[pr] = true;
    col_done[pc] = true;
  }
  std::sort(exps.begin(), exps.end());
  return exps;
}

std::vector<int> exponent_multiplicities(const std::vector<int>& exponents) {
  std::vector<int> mult;
  for (size_t i = 0; i < exponents.size(); ++i) {
    if (i > 0 && exponents[i] == exponents[i - 1])
      ++mult.back();
    else
      mult.push_back(1);
  }
  return mult;
}

Poly poly_determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("poly_determinant: non-square matrix");
  const int n = m.rows();
  if (n == 0) return Poly(Rat(1));
  if (n > 20) throw std::domain_error("poly_determinant: matrix too large for expansion");
  std::unordered_map<uint32_t, Poly> memo;
  // det of the block made of rows popcount(used).. and the unused columns.
  auto rec = [&](auto&& self, uint32_t used) -> Poly {
    const int r = std::popcount(used);
    if (r == n) return Poly(Rat(1));
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    Poly acc;
    int sign = 1;
    for (int c = 0; c < n; ++c) {
      if (used & (1u << c)) continue;
      const Poly& e = m.at(r, c);
      if (!e.is_zero()) {
        const Poly term = e * self(self, used | (1u << c));
        acc = sign > 0 ? acc + term : acc - term;
      }
      sign = -sign;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return rec(rec, 0);
}

namespace {

bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> first_combination(int k) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

}  // namespace

std::optional<int> minor_valuation(const PolyMatrix& m, int i) {
  if (i < 1 || i > std::min(m.rows(), m.cols()))
    throw std::invalid_argument("minor_valuation: order outside 1..min(rows, cols)");
  // Direct expansion when the subset count is tame; otherwise read the
  // valuation off the invariant-factor profile (partial sums).
  const Int work = binomial(m.rows(), i) * binomial(m.cols(), i) * (Int(1) << i);
  if (work <= 2000000) {
    std::optional<int> best;
    std::vector<int> rsel = first_combination(i);
    do {
      std::vector<int> csel = first_combination(i);
      do {
        const Poly d = poly_determinant(m.select(rsel, csel));
        if (!d.is_zero()) {
          const int v = d.valuation();
          if (!best || v < *best) best = v;
        }
      } while (next_combination(csel, m.cols()));
    } while (next_combination(rsel, m.rows()));
    return best;
  }
  const std::vector<int> exps = local_smith_exponents(m);
  if (i > static_cast<int>(exps.size())) return std::nullopt;
  int sum = 0;
  for (int j = 0; j < i; ++j) sum += exps[static_cast<size_t>(j)];
  return sum;
}

LaurentNormalized normalize_laurent(int rows, int cols, const std::vector<std::vector<LaurentTerm>>& entries) {
  if (static_cast<int>(entries.size()) != rows * cols)
    throw std::invalid_argument("normalize_laurent: entry list does not match shape");
  // Accumulate repeated exponents first: only the entry values (after
  // cancellation) decide the shift.
  std::vector<std::map<int, Rat>> acc(entries.size());
  int min_exp = INT_MAX;
  for (size_t i = 0; i < entries.size(); ++i) {
    for (const auto& term : entries[i]) acc[i][term.exponent] += term.coeff;
    for (auto it = acc[i].begin(); it != acc[i].end();) {
      if (it->second == 0)
        it = acc[i].erase(it);
      else {
        min_exp = std::min(min_exp, it->first);
        ++it;
      }
    }
  }
  if (min_exp == INT_MAX) return {PolyMatrix(rows, cols), 0};
  const int shift = -min_exp;
  PolyMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      std::vector<Rat> coeffs;
      for (const auto& [exp, coeff] : acc[static_cast<size_t>(r) * cols + c]) {
        if (static_cast<int>(coeffs.size()) <= exp + shift) coeffs.resize(static_cast<size_t>(exp + shift) + 1);
        coeffs[static_cast<size_t>(exp + shift)] = coeff;
      }
      m.at(r, c) = Poly(std::move(coeffs));
    }
  return {std::move(m), shift};
}

}  // namespace clm
