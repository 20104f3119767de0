#include "clm/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace clm {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("matrix with negative shape");
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  e_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
    for (const auto& x : r) e_.push_back(x);
  }
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

RatMatrix RatMatrix::select(const std::vector<int>& rows, const std::vector<int>& cols) const {
  RatMatrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) s.at(static_cast<int>(i), static_cast<int>(j)) = at(rows[i], cols[j]);
  return s;
}

RatMatrix RatMatrix::vstack(const RatMatrix& below) const {
  if (rows_ == 0 && cols_ == 0) return below;
  if (below.rows_ == 0 && below.cols_ == 0) return *this;
  if (cols_ != below.cols_) throw std::invalid_argument("vstack: column mismatch");
  RatMatrix m(rows_ + below.rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
  for (int r = 0; r < below.rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(rows_ + r, c) = below.at(r, c);
  return m;
}

RatMatrix RatMatrix::hstack(const RatMatrix& right) const {
  if (rows_ != right.rows_) throw std::invalid_argument("hstack: row mismatch");
  RatMatrix m(rows_, cols_ + right.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
    for (int c = 0; c < right.cols_; ++c) m.at(r, cols_ + c) = right.at(r, c);
  }
  return m;
}

void RatMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

void RatMatrix::truncate_rows(int keep) {
  rows_ = keep;
  e_.resize(static_cast<size_t>(keep) * cols_);
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  RatMatrix m(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r)
    for (int k = 0; k < a.cols_; ++k) {
      const Rat& x = a.at(r, k);
      if (x == 0) continue;
      for (int c = 0; c < b.cols_; ++c) m.at(r, c) += x * b.at(k, c);
    }
  return m;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  RatMatrix m(a.rows_, a.cols_);
  for (size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] + b.e_[i];
  return m;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  RatMatrix m(a.rows_, a.cols_);
  for (size_t i = 0; i < a.e_.size(); ++i) m.e_[i] = a.e_[i] - b.e_[i];
  return m;
}

namespace {

// Multiplies each row through by the lcm of its denominators (and shrinks by
// the gcd of the numerators), so the fraction-free pass below works on
// integers.  Row scaling does not change the row space.
void clear_denominators(RatMatrix& m) {
  for (int r = 0; r < m.rows(); ++r) {
    Int l = 1;
    for (int c = 0; c < m.cols(); ++c) l = lcm(l, m.at(r, c).get_den());
    if (l != 1)
      for (int c = 0; c < m.cols(); ++c) m.at(r, c) *= Rat(l);
    Int g = 0;
    for (int c = 0; c < m.cols(); ++c) g = gcd(g, m.at(r, c).get_num());
    if (g > 1)
      for (int c = 0; c < m.cols(); ++c) m.at(r, c) /= Rat(g);
  }
}

}  // namespace

std::vector<int> reduced_row_echelon(RatMatrix& m) {
  clear_denominators(m);
  std::vector<int> pivots;
  Rat prev(1);
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m.at(r, col) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    m.swap_rows(row, p);
    const Rat piv = m.at(row, col);
    for (int r = row + 1; r < m.rows(); ++r) {
      const Rat f = m.at(r, col);
      m.at(r, col) = 0;
      for (int c = col + 1; c < m.cols(); ++c) m.at(r, c) = (piv * m.at(r, c) - f * m.at(row, c)) / prev;
    }
    prev = piv;
    pivots.push_back(col);
    ++row;
  }
  // Final normalization: unit pivots, zeros above, zero rows dropped.
  for (int i = static_cast<int>(pivots.size()) - 1; i >= 0; --i) {
    const int pc = pivots[i];
    const Rat piv = m.at(i, pc);
    for (int c = pc; c < m.cols(); ++c) m.at(i, c) /= piv;
    for (int r = 0; r < i; ++r) {
      const Rat f = m.at(r, pc);
      if (f == 0) continue;
      for (int c = pc; c < m.cols(); ++c) m.at(r, c) -= f * m.at(i, c);
    }
  }
  m.truncate_rows(static_cast<int>(pivots.size()));
  return pivots;
}

int rank(const RatMatrix& m) {
  RatMatrix r = m;
  return static_cast<int>(reduced_row_echelon(r).size());
}

Rat determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  RatMatrix a = m;
  Rat scale(1);  // product of row scalings applied while clearing denominators
  for (int r = 0; r < n; ++r) {
    Int l = 1;
    for (int c = 0; c < n; ++c) l = lcm(l, a.at(r, c).get_den());
    if (l != 1) {
      for (int c = 0; c < n; ++c) a.at(r, c) *= Rat(l);
      scale *= Rat(l);
    }
  }
  Rat prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (a.at(r, k) != 0) {
          p = r;
          break;
        }
      if (p < 0) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) a.at(r, c) = (a.at(k, k) * a.at(r, c) - a.at(r, k) * a.at(k, c)) / prev;
      a.at(r, k) = 0;
    }
    prev = a.at(k, k);
  }
  return Rat(sign) * a.at(n - 1, n - 1) / scale;
}

std::optional<RatMatrix> solve_linear(const RatMatrix& a, const RatMatrix& rhs) {
  if (a.rows() != rhs.rows()) throw std::invalid_argument("solve_linear: row mismatch");
  const int n = a.cols();
  RatMatrix aug = a.hstack(rhs);
  std::vector<int> pivots = reduced_row_echelon(aug);
  for (int p : pivots)
    if (p >= n) return std::nullopt;  // a pivot in the right-hand block: inconsistent
  RatMatrix x(n, rhs.cols());
  for (size_t i = 0; i < pivots.size(); ++i)
    for (int j = 0; j < rhs.cols(); ++j) x.at(pivots[i], j) = aug.at(static_cast<int>(i), n + j);
  return x;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  // [m | I] always has full row rank, so singular m forces a pivot into the
  // right-hand block and solve_linear reports the inconsistency.
  auto x = solve_linear(m, RatMatrix::identity(m.rows()));
  if (!x) throw std::domain_error("inverse of singular matrix");
  return *x;
}

}  // namespace clm
