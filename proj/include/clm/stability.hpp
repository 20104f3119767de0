#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clm/collineation.hpp"
#include "clm/subspace.hpp"

namespace clm {

enum class Stability { stable, strictly_semistable, unstable };

std::string stability_name(Stability s);
Stability stability_from_name(const std::string& name);

// The graded object a strictly semistable subspace degenerates to in the
// quotient: a pair of subspaces of V and W.
struct GradedObject {
  Subspace v_part;
  Subspace w_part;

  bool operator==(const GradedObject&) const = default;
};

// Stability of a u-dimensional subspace of V (+) W under the scaling action,
// at linearization parameter sigma.  Semistability holds exactly when
// dim(U cap V) <= u - sigma and dim(U cap W) <= sigma, so the semistable
// parameter range is the (never empty) interval
// [dim U cap W, u - dim U cap V].
struct StabilityReport {
  Rat sigma;
  Stability status = Stability::unstable;
  int dim_u_cap_v = 0;
  int dim_u_cap_w = 0;
  int interval_lo = 0;
  int interval_hi = 0;
  std::optional<GradedObject> graded;

  bool operator==(const StabilityReport&) const = default;
};

StabilityReport classify(const Subspace& u_space, const Rat& sigma);

// Exponential-but-exact second route to the same answer: the weights of the
// scaling action on the nonzero Pluecker coordinates of U.  A coordinate
// indexed by a basis subset with a vectors from V and u - a from W has
// weight 2a - u; U is semistable at sigma exactly when
// min_weight <= u - 2 sigma <= max_weight.  The orbit degree is
// (max - min) / gcd of the weight differences, zero for a fixed point.
// Enumerates all column subsets: limited to u <= 6 and ambient <= 14.
struct WeightSupport {
  std::vector<int> weights;  // distinct weights present, ascending
  int orbit_degree = 0;

  bool operator==(const WeightSupport&) const = default;
};

WeightSupport plucker_weight_support(const Subspace& u_space);

bool weight_semistable(const WeightSupport& support, int u, const Rat& sigma);

// True when the subspace criterion and the weight-support criterion agree at
// sigma; the test suite asserts this everywhere.
bool semistable_oracle_equivalence(const Subspace& u_space, const Rat& sigma);

// Dimension bookkeeping for the family of quotients: the common quotient
// dimension, the wall values of sigma, and for each interior wall k the
// fixed locus Z0_k, the attracting/repelling loci Z-_k and Z+_k it blows
// down to, and the rank-k secant variety.
struct WallLocus {
  int k = 0;
  long dim_z0 = 0;
  long dim_z_minus = 0;
  long dim_z_plus = 0;
  long dim_secant = 0;

  bool operator==(const WallLocus&) const = default;
};

struct DimReport {
  Context ctx;
  Flavor flavor = Flavor::general;
  long dim_quotient = 0;
  std::vector<int> walls;        // integer points of [0, u]; even only for skew
  std::vector<WallLocus> loci;   // k = 1..u-1
  long dim_end_v = 0;            // bundle count over Gr_u V; equals dim_quotient
  long dim_end_w = 0;            // bundle count over Gr_u W; equals dim_quotient

  bool operator==(const DimReport&) const = default;
};

DimReport dims_report(const Context& ctx, Flavor flavor);

}  // namespace clm
