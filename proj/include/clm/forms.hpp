#pragma once

#include <optional>
#include <string_view>

#include "clm/matrix.hpp"
#include "clm/subspace.hpp"

namespace clm {

// The two pairings carried by V (+) V* in standard coordinates, with the W
// factor of a split ambient playing the role of V*:
//
//   symplectic   w((v,p),(v',p')) = p'(v) - p(v')
//   symmetric    q((v,p),(v',p')) = p'(v) + p(v')
//
// evaluated on row vectors as x * gram * y^T.
enum class PairingKind { symplectic, symmetric };

const char* pairing_name(PairingKind kind);
PairingKind pairing_from_name(std::string_view name);

// [[0, I], [-I, 0]] for the symplectic pairing, [[0, I], [I, 0]] for the
// symmetric one.  The sign convention is fixed here and nowhere else.
RatMatrix gram_matrix(PairingKind kind, int dim_v);

enum class Parity { even, odd };

struct IsotropyReport {
  bool isotropic = false;
  bool maximal = false;  // isotropic of the largest possible dimension, dim V
  int dim_u_cap_v = 0;
  Parity v_intersection_parity = Parity::even;
  // For maximal isotropics of the symmetric pairing only: whether the
  // subspace lies in the connected component of the orthogonal Grassmannian
  // containing V itself, decided by dim(U cap V) == dim V (mod 2).
  std::optional<bool> plus_component;

  bool operator==(const IsotropyReport&) const = default;
};

// Evaluates the chosen pairing on a subspace of V (+) V*.  The ambient must
// be split with matching factor dimensions.
IsotropyReport isotropy_check(const Subspace& u_space, PairingKind kind);

}  // namespace clm
