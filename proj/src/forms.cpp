#include "clm/forms.hpp"

#include <stdexcept>
#include <string>

namespace clm {

const char* pairing_name(PairingKind kind) {
  return kind == PairingKind::symplectic ? "symplectic" : "symmetric";
}

PairingKind pairing_from_name(std::string_view name) {
  if (name == "symplectic") return PairingKind::symplectic;
  if (name == "symmetric") return PairingKind::symmetric;
  throw std::invalid_argument("unknown pairing kind: " + std::string(name));
}

RatMatrix gram_matrix(PairingKind kind, int dim_v) {
  if (dim_v <= 0) throw std::invalid_argument("gram_matrix: dimension must be positive");
  RatMatrix g(2 * dim_v, 2 * dim_v);
  for (int i = 0; i < dim_v; ++i) {
    g.at(i, dim_v + i) = 1;
    g.at(dim_v + i, i) = kind == PairingKind::symplectic ? Rat(-1) : Rat(1);
  }
  return g;
}

IsotropyReport isotropy_check(const Subspace& u_space, PairingKind kind) {
  if (!u_space.split())
    throw std::invalid_argument("isotropy_check: ambient carries no V/W split");
  const Split split = *u_space.split();
  if (split.dim_v != split.dim_w)
    throw std::invalid_argument(
        "isotropy_check: the W factor must match V in dimension to act as V*");

  const RatMatrix b = u_space.basis();
  const RatMatrix pairing = b * gram_matrix(kind, split.dim_v) * b.transposed();

  IsotropyReport report;
  report.isotropic = pairing.is_zero();
  report.maximal = report.isotropic && u_space.dim() == split.dim_v;
  report.dim_u_cap_v = intersect_v(u_space).dim();
  report.v_intersection_parity =
      report.dim_u_cap_v % 2 == 0 ? Parity::even : Parity::odd;
  if (kind == PairingKind::symmetric && report.maximal)
    report.plus_component = (report.dim_u_cap_v - split.dim_v) % 2 == 0;
  return report;
}

}  // namespace clm
