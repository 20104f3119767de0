#pragma once

#include <optional>
#include <vector>

#include "clm/matrix.hpp"
#include "clm/poly.hpp"

namespace clm {

// Dense matrix over Q[t], row major.  Same column-vector convention as
// RatMatrix: an r x c matrix is a t-family of maps Q^c -> Q^r.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols);
  static PolyMatrix constant(const RatMatrix& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Poly& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const Poly& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

  bool is_zero() const;
  RatMatrix coefficient(int k) const;  // entrywise coefficient of t^k
  RatMatrix eval(const Rat& x) const;
  PolyMatrix transposed() const;
  PolyMatrix select(const std::vector<int>& rows, const std::vector<int>& cols) const;
  PolyMatrix scaled_by_t(int k) const;  // entrywise multiplication by t^k
  PolyMatrix mod_t_pow(int m) const;

  bool operator==(const PolyMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Poly> e_;
};

// Minimal valuation among the nonzero entries.  The matrix must not be
// identically zero.
int entry_valuation(const PolyMatrix& m);

// Orders of the invariant factors of m over the local ring at t = 0,
// ascending.  The length of the list is the generic rank of m over Q(t).
// Computed by valuation-pivot elimination, truncating all arithmetic mod
// t^D for the provably sufficient bound
// D = min(sum of row max degrees, sum of column max degrees) + 1:
// any minor's degree, hence any invariant-factor order, stays below D.
std::vector<int> local_smith_exponents(const PolyMatrix& m);

// The truncation bound D used by the t-adic elimination above (and by the
// limit extraction built on it).
int smith_truncation_bound(const PolyMatrix& m);

// Multiplicities of the distinct values in an ascending exponent list, in
// order of appearance.
std::vector<int> exponent_multiplicities(const std::vector<int>& exponents);

// Minimal valuation among all i x i minors, or nullopt when every i x i
// minor vanishes identically (i exceeds the generic rank).  Small cases run
// by direct minor expansion; larger ones fall back to partial sums of the
// Smith exponents.
std::optional<int> minor_valuation(const PolyMatrix& m, int i);

// Exact determinant over Q[t] (memoized Laplace expansion; supports up to 20
// columns).
Poly poly_determinant(const PolyMatrix& m);

// Laurent ingestion: entry (r, c) is given as a list of (exponent, coeff)
// terms with exponents of either sign.  The matrix is multiplied through by
// the minimal power of t that clears every denominator, so the result has
// entry valuation exactly 0; `shift` records that power (result = t^shift *
// input).
struct LaurentTerm {
  int exponent;
  Rat coeff;
};
struct LaurentNormalized {
  PolyMatrix matrix;
  int shift;
};
LaurentNormalized normalize_laurent(int rows, int cols, const std::vector<std::vector<LaurentTerm>>& entries);

}  // namespace clm
