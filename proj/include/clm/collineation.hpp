#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clm/polymatrix.hpp"
#include "clm/subspace.hpp"

namespace clm {

enum class Flavor { general, symmetric, skew };

std::string flavor_name(Flavor f);
Flavor flavor_from_name(const std::string& name);

// Ambient dimensions: maps go from a u-dimensional subspace of V into W.
// The symmetric and skew flavors identify W with the dual of V, so they
// require dim_v == dim_w == u.
struct Context {
  int dim_v = 0;
  int dim_w = 0;
  int u = 0;

  bool operator==(const Context&) const = default;
};

void check_context(const Context& ctx);

// One stage: a nonzero map from the previous stage's kernel into the previous
// stage's cokernel.  The matrix is written in canonical coordinates — columns
// index the echelon basis of the current domain, rows index the non-pivot
// coordinates of the cumulative image accrued by the earlier stages.  The
// kernel is stored in ambient V coordinates.
struct Stage {
  RatMatrix map;
  Subspace kernel;
  int rank = 0;

  bool operator==(const Stage&) const = default;
};

// A complete collineation: a nonzero map from U into W together with the
// chain of induced maps from each kernel into the previous cokernel, ending
// only when the kernel is exhausted (a skew form on an odd-dimensional space
// may leave a one-dimensional null direction).
struct CompleteCollineation {
  Context ctx;
  Flavor flavor = Flavor::general;
  Subspace domain;
  std::vector<Stage> stages;

  bool operator==(const CompleteCollineation&) const = default;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;

  bool operator==(const ValidationReport&) const = default;
};

// Limit at t = 0 of a one-parameter family A(t): U -> W of generic rank u.
// The family is a dim_w x u matrix over Q[t]; the domain U is the span of the
// first u coordinates of V.  The stage maps are extracted by iterating the
// Schur complement of the invertible block at each order, which keeps the
// higher stages consistent with the invariant factors of A(t) even when a
// plain restriction of the next t-coefficient would vanish.  Throws
// std::domain_error when the family's generic rank is too small to fill out
// every stage.
CompleteCollineation limit_collineation(const PolyMatrix& family, const Context& ctx,
                                        Flavor flavor = Flavor::general);

// Limits of symmetric (quadric) and antisymmetric families; these also verify
// that every stage map is self-adjoint resp. skew-adjoint with respect to the
// pairing the previous kernel inherits.
CompleteCollineation limit_quadric(const PolyMatrix& family, const Context& ctx);
CompleteCollineation limit_skew(const PolyMatrix& family, const Context& ctx);

ValidationReport validate_collineation(const CompleteCollineation& cc);

// Stage domains K_0 = U, K_1, ..., K_{i-1} as subspaces of V (K_j is the
// kernel of stage j).
std::vector<Subspace> stage_domains(const CompleteCollineation& cc);

// Ascending chain of cumulative images I_1, ..., I_i in W: I_j is spanned by
// the (lifted) images of the first j stages.
std::vector<Subspace> cumulative_images(const CompleteCollineation& cc);

// The flags cut out by a complete collineation: v_flag is the descending
// chain of stage kernels in V, w_flag the ascending chain of cumulative
// images in W.  A collineation is of Halphen type when every stage has
// rank one.
struct FlagPair {
  std::vector<Subspace> v_flag;
  std::vector<Subspace> w_flag;
  bool is_halphen = false;

  bool operator==(const FlagPair&) const = default;
};

FlagPair flags(const CompleteCollineation& cc);

// Degeneration of an invertible u x u matrix a under the torus acting with
// weight j on the j-th coordinate of the source and -i on the i-th coordinate
// of the target: the family with entries a_ij t^(-i-j) (1-based i, j), scaled
// to valuation zero.  With the default context both ambient spaces are u-
// dimensional; a custom context may enlarge V, keeping dim_w == u.
CompleteCollineation halphen_degeneration(const RatMatrix& a,
                                          std::optional<Context> ctx = std::nullopt);

}  // namespace clm
