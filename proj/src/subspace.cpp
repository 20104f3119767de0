#include "clm/subspace.hpp"

#include <stdexcept>

namespace clm {

Subspace canonicalize(int ambient, RatMatrix vectors, std::optional<Split> split) {
  if (vectors.rows() > 0 && vectors.cols() != ambient)
    throw std::invalid_argument("canonicalize: vectors do not match the ambient dimension");
  if (split && split->dim_v + split->dim_w != ambient)
    throw std::invalid_argument("canonicalize: split does not match the ambient dimension");
  if (vectors.rows() == 0) vectors = RatMatrix(0, ambient);
  reduced_row_echelon(vectors);
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = std::move(vectors);
  s.split_ = std::move(split);
  return s;
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient_ != other.ambient_) return false;
  if (other.dim() == 0) return true;
  RatMatrix stacked = basis_.vstack(other.basis());
  return rank(stacked) == dim();
}

MeetJoin meet_join(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("meet_join: ambient mismatch");
  const auto split = a.split() == b.split() ? a.split() : std::nullopt;
  Subspace join = canonicalize(a.ambient(), a.basis().vstack(b.basis()), split);

  if (a.dim() == 0 || b.dim() == 0) {
    return {canonicalize(a.ambient(), RatMatrix(0, a.ambient()), split), std::move(join)};
  }
  // meet via the relation space: x = alpha^T a = beta^T b exactly when
  // (alpha, beta) kills [a^T | -b^T].
  RatMatrix neg_bt = b.basis().transposed();
  for (int r = 0; r < neg_bt.rows(); ++r)
    for (int c = 0; c < neg_bt.cols(); ++c) neg_bt.at(r, c) = -neg_bt.at(r, c);
  RatMatrix rel = a.basis().transposed().hstack(neg_bt);
  MapDecomposition d = rank_kernel_cokernel(rel);
  const RatMatrix& ker = d.kernel.basis();  // rows are (alpha, beta)
  RatMatrix meet_rows(ker.rows(), a.ambient());
  for (int r = 0; r < ker.rows(); ++r)
    for (int j = 0; j < a.dim(); ++j) {
      const Rat& alpha = ker.at(r, j);
      if (alpha == 0) continue;
      for (int c = 0; c < a.ambient(); ++c) meet_rows.at(r, c) += alpha * a.basis().at(j, c);
    }
  return {canonicalize(a.ambient(), std::move(meet_rows), split), std::move(join)};
}

CokernelModel cokernel_model(const Subspace& image) {
  const int n = image.ambient();
  const RatMatrix& rref = image.basis();
  // Recover pivot columns from the echelon basis.
  std::vector<int> piv;
  std::vector<bool> is_pivot(n, false);
  for (int r = 0; r < rref.rows(); ++r) {
    int c = 0;
    while (c < n && rref.at(r, c) == 0) ++c;
    piv.push_back(c);
    is_pivot[c] = true;
  }
  std::vector<int> nonpiv;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) nonpiv.push_back(c);

  // projection(y) = coordinates of y - sum_k y[piv_k] * row_k at the
  // non-pivot columns; its kernel is exactly the image.
  RatMatrix proj(static_cast<int>(nonpiv.size()), n);
  for (size_t a = 0; a < nonpiv.size(); ++a) {
    proj.at(static_cast<int>(a), nonpiv[a]) = 1;
    for (size_t k = 0; k < piv.size(); ++k) proj.at(static_cast<int>(a), piv[k]) = -rref.at(static_cast<int>(k), nonpiv[a]);
  }
  RatMatrix sect(n, static_cast<int>(nonpiv.size()));
  for (size_t a = 0; a < nonpiv.size(); ++a) sect.at(nonpiv[a], static_cast<int>(a)) = 1;
  return {std::move(proj), std::move(sect)};
}

MapDecomposition rank_kernel_cokernel(const RatMatrix& m) {
  RatMatrix rref = m;
  const std::vector<int> piv = reduced_row_echelon(rref);
  const int rk = static_cast<int>(piv.size());

  // Null space from the echelon form: one basis vector per free column.
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RatMatrix kb(static_cast<int>(free_cols.size()), m.cols());
  for (size_t i = 0; i < free_cols.size(); ++i) {
    kb.at(static_cast<int>(i), free_cols[i]) = 1;
    for (int r = 0; r < rk; ++r) kb.at(static_cast<int>(i), piv[r]) = -rref.at(r, free_cols[i]);
  }
  Subspace kernel = canonicalize(m.cols(), std::move(kb));
  Subspace image = canonicalize(m.rows(), m.transposed());
  return {rk, std::move(kernel), cokernel_model(image).projection};
}

Subspace v_factor(const Split& s) {
  RatMatrix b(s.dim_v, s.dim_v + s.dim_w);
  for (int i = 0; i < s.dim_v; ++i) b.at(i, i) = 1;
  return canonicalize(s.dim_v + s.dim_w, std::move(b), s);
}

Subspace w_factor(const Split& s) {
  RatMatrix b(s.dim_w, s.dim_v + s.dim_w);
  for (int i = 0; i < s.dim_w; ++i) b.at(i, s.dim_v + i) = 1;
  return canonicalize(s.dim_v + s.dim_w, std::move(b), s);
}

namespace {

const Split& require_split(const Subspace& u, const char* who) {
  if (!u.split()) throw std::domain_error(std::string(who) + ": subspace carries no V/W split");
  return *u.split();
}

std::vector<int> iota_vec(int from, int count) {
  std::vector<int> v(count);
  for (int i = 0; i < count; ++i) v[i] = from + i;
  return v;
}

}  // namespace

Subspace intersect_v(const Subspace& u) {
  const Split& s = require_split(u, "intersect_v");
  Subspace inter = meet_join(u, v_factor(s)).meet;
  // Basis rows have zero W part; keep the V coordinates.
  std::vector<int> rows = iota_vec(0, inter.dim());
  return canonicalize(s.dim_v, inter.basis().select(rows, iota_vec(0, s.dim_v)));
}

Subspace intersect_w(const Subspace& u) {
  const Split& s = require_split(u, "intersect_w");
  Subspace inter = meet_join(u, w_factor(s)).meet;
  std::vector<int> rows = iota_vec(0, inter.dim());
  return canonicalize(s.dim_w, inter.basis().select(rows, iota_vec(s.dim_v, s.dim_w)));
}

Subspace project_v(const Subspace& u) {
  const Split& s = require_split(u, "project_v");
  std::vector<int> rows = iota_vec(0, u.dim());
  return canonicalize(s.dim_v, u.basis().select(rows, iota_vec(0, s.dim_v)));
}

Subspace project_w(const Subspace& u) {
  const Split& s = require_split(u, "project_w");
  std::vector<int> rows = iota_vec(0, u.dim());
  return canonicalize(s.dim_w, u.basis().select(rows, iota_vec(s.dim_v, s.dim_w)));
}

}  // namespace clm
