#pragma once

#include <string>
#include <utility>
#include <vector>

#include "clm/collineation.hpp"
#include "clm/stability.hpp"

namespace clm {

// A cycle in Gr_u(V (+) W) written as its ordered chain of components.  Valid
// chains satisfy the five nodal equations checked by validate_chain.
struct NodalChain {
  Context ctx;
  std::vector<Subspace> components;

  bool operator==(const NodalChain&) const = default;
};

// Limits of the scaling orbit through U: the sink (V-part scaled to zero,
// W-heavy) is (U cap V) (+) p_W(U); the source (W-part scaled away, V-heavy)
// is p_V(U) (+) (U cap W).  Both are decomposable fixed points.
struct SinkSource {
  Subspace sink;
  Subspace source;

  bool operator==(const SinkSource&) const = default;
};

SinkSource sink_source(const Subspace& u_space);

// Per component, the pair of projective dimensions of the factors the
// component maps onto: (dim P(p_V(U_j)), dim P(p_W(U_j))).
struct GraphCycleShape {
  std::vector<std::pair<int, int>> components;

  bool operator==(const GraphCycleShape&) const = default;
};

// Validation result.  `valid` reflects the five nodal equations (and basic
// shape checks); adjacency, total degree, and the cycle shape are reported
// alongside.  The total degree needs the Pluecker weight support of every
// component, so it is only computed within that oracle's size limits;
// total_degree is -1 when out of range.
struct ChainReport {
  bool valid = true;
  std::vector<int> violated_equations;  // subset of {1, ..., 5}, ascending
  std::vector<std::string> violations;
  bool adjacent = true;  // sink(U_j) == source(U_{j+1}) throughout
  int total_degree = -1;
  bool degree_matches = false;  // total_degree == u (false when not computed)
  GraphCycleShape shape;

  bool operator==(const ChainReport&) const = default;
};

ChainReport validate_chain(const NodalChain& chain);

// The chain of graphs attached to a complete collineation: U_1 is the graph
// of the first stage; each later component couples the graph of stage j+1
// (lifted to W through the canonical section) with the cumulative image
// accrued so far.  Requires the stage ranks to exhaust the domain, so a skew
// collineation with a null line has no chain.
NodalChain chain_from_collineation(const CompleteCollineation& cc);

// Inverse construction: stage j maps p_V(U_j) into W modulo U_j cap W (the
// cumulative image the chain itself records).  Chains carry no flavor, so the
// result is always general-flavored.  Roundtrips with chain_from_collineation
// are exact in both orders.
CompleteCollineation collineation_from_chain(const NodalChain& chain);

}  // namespace clm
