#pragma once

#include <optional>

#include "clm/matrix.hpp"

namespace clm {

// Marks an ambient coordinate space as V (+) W: the first dim_v coordinates
// span V, the remaining dim_w span W.  Coordinate i of W is paired with
// coordinate i of V when the ambient is read as V (+) V*.
struct Split {
  int dim_v = 0;
  int dim_w = 0;
  bool operator==(const Split&) const = default;
};

// Linear subspace of Q^ambient.  The stored basis is the unique reduced row
// echelon form (rows are basis vectors; the zero subspace keeps a 0 x ambient
// basis), so equal subspaces compare equal componentwise.
class Subspace {
 public:
  Subspace() = default;

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }
  const std::optional<Split>& split() const { return split_; }
  void set_split(std::optional<Split> s) { split_ = std::move(s); }

  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_ && split_ == o.split_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  friend Subspace canonicalize(int, RatMatrix, std::optional<Split>);
  int ambient_ = 0;
  RatMatrix basis_;  // RREF, dim x ambient
  std::optional<Split> split_;
};

// Span of the given row vectors, reduced to the canonical echelon basis.
Subspace canonicalize(int ambient, RatMatrix vectors, std::optional<Split> split = std::nullopt);

struct MeetJoin {
  Subspace meet;
  Subspace join;
};
MeetJoin meet_join(const Subspace& a, const Subspace& b);

// Cokernel of a subspace I of Q^n, modeled concretely: `projection` (an
// (n - dim I) x n surjection with kernel exactly I) sends a vector to its
// class in the non-pivot coordinates of I's echelon basis, and `section`
// (n x (n - dim I)) includes those coordinates back, with
// projection * section = id.
struct CokernelModel {
  RatMatrix projection;
  RatMatrix section;
};
CokernelModel cokernel_model(const Subspace& image);

struct MapDecomposition {
  int rank;
  Subspace kernel;                // null space of m inside the domain Q^cols
  RatMatrix cokernel_projection;  // surjection Q^rows -> coker(m), kernel = im(m)
};
MapDecomposition rank_kernel_cokernel(const RatMatrix& m);

// Helpers for the two coordinate factors of a split ambient space.  The
// *_factor subspaces live in V (+) W; intersections and projections are
// returned in the coordinates of the factor itself.
Subspace v_factor(const Split& s);
Subspace w_factor(const Split& s);
Subspace intersect_v(const Subspace& u);  // U cap V, ambient dim_v
Subspace intersect_w(const Subspace& u);  // U cap W, ambient dim_w
Subspace project_v(const Subspace& u);    // p_V(U), ambient dim_v
Subspace project_w(const Subspace& u);    // p_W(U), ambient dim_w

}  // namespace clm
