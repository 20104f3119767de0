#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "clm/rat.hpp"

namespace clm {

// Dense matrix over Q, row major.  An r x c matrix acts on column vectors,
// mapping Q^c to Q^r.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);
  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

  bool is_zero() const;
  RatMatrix transposed() const;
  RatMatrix select(const std::vector<int>& rows, const std::vector<int>& cols) const;
  RatMatrix vstack(const RatMatrix& below) const;
  RatMatrix hstack(const RatMatrix& right) const;
  void swap_rows(int a, int b);
  void truncate_rows(int keep);

  bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
  bool operator!=(const RatMatrix& o) const { return !(*this == o); }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> e_;
};

// Unique reduced row echelon form, in place; returns the pivot columns.
// The forward pass is fraction-free (Bareiss) on denominator-cleared rows so
// intermediate entries stay integral with polynomially bounded bit size;
// pivots are normalized to 1 and cleared upward afterwards.  Zero rows are
// dropped.
std::vector<int> reduced_row_echelon(RatMatrix& m);

int rank(const RatMatrix& m);

// Bareiss fraction-free determinant.
Rat determinant(const RatMatrix& m);

// Particular solution X of A X = rhs (free variables set to 0), or nullopt
// when the system is inconsistent.
std::optional<RatMatrix> solve_linear(const RatMatrix& a, const RatMatrix& rhs);

// Inverse of a square matrix; throws std::domain_error when singular.
RatMatrix inverse(const RatMatrix& m);

}  // namespace clm
