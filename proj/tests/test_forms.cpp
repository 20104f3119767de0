#include "doctest.h"

#include <random>

#include "clm/chain.hpp"
#include "clm/forms.hpp"
#include "test_support.hpp"

using namespace clm;
using testsupport::random_integer_matrix;

namespace {
constexpr int kIterations = 150;

Subspace graph_of(const RatMatrix& a) {
  const int n = a.rows();
  return canonicalize(2 * n, RatMatrix::identity(n).hstack(a.transposed()), Split{n, n});
}

Subspace v_factor_space(int n) {
  return canonicalize(2 * n, RatMatrix::identity(n).hstack(RatMatrix(n, n)), Split{n, n});
}
}  // namespace

TEST_CASE("gram matrices of both pairings") {
  for (int n = 1; n <= 4; ++n) {
    const RatMatrix symplectic = gram_matrix(PairingKind::symplectic, n);
    const RatMatrix symmetric = gram_matrix(PairingKind::symmetric, n);
    CHECK((symplectic + symplectic.transposed()).is_zero());
    CHECK(symmetric == symmetric.transposed());
    CHECK(rank_kernel_cokernel(symplectic).rank == 2 * n);
    CHECK(rank_kernel_cokernel(symmetric).rank == 2 * n);
  }
  const RatMatrix g = gram_matrix(PairingKind::symplectic, 1);
  CHECK(g == RatMatrix({{0, 1}, {-1, 0}}));
  CHECK(gram_matrix(PairingKind::symmetric, 1) == RatMatrix({{0, 1}, {1, 0}}));
  CHECK(pairing_from_name(pairing_name(PairingKind::symplectic)) == PairingKind::symplectic);
  CHECK(pairing_from_name("symmetric") == PairingKind::symmetric);
  CHECK_THROWS_AS(pairing_from_name("hermitian"), std::invalid_argument);
  CHECK_THROWS_AS(gram_matrix(PairingKind::symmetric, 0), std::invalid_argument);
}

TEST_CASE("isotropy of distinguished subspaces") {
  for (int n = 1; n <= 4; ++n) {
    const Subspace v = v_factor_space(n);
    for (PairingKind kind : {PairingKind::symplectic, PairingKind::symmetric}) {
      const IsotropyReport report = isotropy_check(v, kind);
      CHECK(report.isotropic);
      CHECK(report.maximal);
      CHECK(report.dim_u_cap_v == n);
      CHECK(report.v_intersection_parity == (n % 2 == 0 ? Parity::even : Parity::odd));
    }
    CHECK(*isotropy_check(v, PairingKind::symmetric).plus_component);
    CHECK_FALSE(isotropy_check(v, PairingKind::symplectic).plus_component.has_value());
  }

  // The graph of the identity pairs self-adjointly: Lagrangian for the
  // symplectic pairing, visibly non-isotropic for the symmetric one.
  const Subspace diag = graph_of(RatMatrix::identity(2));
  CHECK(isotropy_check(diag, PairingKind::symplectic) ==
        IsotropyReport{true, true, 0, Parity::even, std::nullopt});
  CHECK_FALSE(isotropy_check(diag, PairingKind::symmetric).isotropic);

  // A skew-adjoint graph is the opposite: maximal isotropic for the
  // symmetric pairing, in the same component as V when dim V is even.
  const Subspace skew = graph_of(RatMatrix({{0, 1}, {-1, 0}}));
  const IsotropyReport skew_report = isotropy_check(skew, PairingKind::symmetric);
  CHECK(skew_report.isotropic);
  CHECK(skew_report.maximal);
  CHECK(skew_report.dim_u_cap_v == 0);
  CHECK(*skew_report.plus_component);
  CHECK_FALSE(isotropy_check(skew, PairingKind::symplectic).isotropic);

  // Mixed coordinate subspace <e1, f2>: maximal isotropic for both kinds but
  // with odd V-intersection, so on the other orthogonal component.
  const Subspace mixed = canonicalize(4, RatMatrix({{1, 0, 0, 0}, {0, 0, 0, 1}}), Split{2, 2});
  const IsotropyReport mixed_report = isotropy_check(mixed, PairingKind::symmetric);
  CHECK(mixed_report.maximal);
  CHECK(mixed_report.dim_u_cap_v == 1);
  CHECK(mixed_report.v_intersection_parity == Parity::odd);
  CHECK_FALSE(*mixed_report.plus_component);

  // Small subspaces can be isotropic without being maximal.
  const Subspace line = canonicalize(4, RatMatrix({{1, 0, 0, 0}}), Split{2, 2});
  const IsotropyReport line_report = isotropy_check(line, PairingKind::symplectic);
  CHECK(line_report.isotropic);
  CHECK_FALSE(line_report.maximal);
}

TEST_CASE("graphs detect adjointness of their maps") {
  std::mt19937_64 rng(7341);
  for (int iter = 0; iter < kIterations; ++iter) {
    const int n = 2 + iter % 3;
    const RatMatrix half = random_integer_matrix(rng, n, n);
    const RatMatrix self_adjoint = half + half.transposed();
    const RatMatrix skew_adjoint = half - half.transposed();

    CHECK(isotropy_check(graph_of(self_adjoint), PairingKind::symplectic).maximal);
    CHECK(isotropy_check(graph_of(skew_adjoint), PairingKind::symmetric).maximal);

    // Breaking the symmetry in a single entry must break isotropy.
    RatMatrix bent = self_adjoint;
    bent.at(0, 1) = bent.at(0, 1) + 1;
    CHECK_FALSE(isotropy_check(graph_of(bent), PairingKind::symplectic).isotropic);
    RatMatrix dented = skew_adjoint;
    dented.at(0, 0) = dented.at(0, 0) + 1;
    CHECK_FALSE(isotropy_check(graph_of(dented), PairingKind::symmetric).isotropic);

    // Self-adjoint graphs meet the symmetric kind only when the map is also
    // skew, i.e. zero; skew graphs likewise fail the symplectic kind.
    if (!self_adjoint.is_zero())
      CHECK_FALSE(isotropy_check(graph_of(self_adjoint), PairingKind::symmetric).isotropic);
    if (!skew_adjoint.is_zero())
      CHECK_FALSE(isotropy_check(graph_of(skew_adjoint), PairingKind::symplectic).isotropic);
  }
}

TEST_CASE("symplectic isotropy along quadric degenerations") {
  std::mt19937_64 rng(9120);
  int hits = 0;
  for (int iter = 0; iter < kIterations && hits < 40; ++iter) {
    const int u = 2 + iter % 2;
    const RatMatrix half0 = random_integer_matrix(rng, u, u);
    const RatMatrix half1 = random_integer_matrix(rng, u, u);
    PolyMatrix family = PolyMatrix::constant(half0 + half0.transposed());
    const RatMatrix a1 = half1 + half1.transposed();
    for (int r = 0; r < u; ++r)
      for (int c = 0; c < u; ++c) {
        Poly entry = family.at(r, c);
        family.at(r, c) = entry + Poly(std::vector<Rat>{0, a1.at(r, c)});
      }
    if (static_cast<int>(local_smith_exponents(family).size()) < u) continue;
    ++hits;
    const CompleteCollineation cc = limit_quadric(family, Context{u, u, u});
    const NodalChain chain = chain_from_collineation(cc);
    for (const Subspace& component : chain.components) {
      const IsotropyReport report = isotropy_check(component, PairingKind::symplectic);
      CHECK(report.isotropic);
      CHECK(report.maximal);
    }
  }
  CHECK(hits == 40);
}

TEST_CASE("orthogonal isotropy along skew degenerations") {
  std::mt19937_64 rng(40302);
  const Poly t = Poly(std::vector<Rat>{0, 1});

  // Fixed staircase: two symplectic blocks arriving at different speeds.
  PolyMatrix staircase(4, 4);
  staircase.at(0, 1) = Poly(Rat(1));
  staircase.at(1, 0) = Poly(Rat(-1));
  staircase.at(2, 3) = t;
  staircase.at(3, 2) = Poly(std::vector<Rat>{0, -1});
  std::vector<PolyMatrix> families{staircase};

  int iter = 0;
  while (families.size() < 30) {
    const int u = 4;
    const RatMatrix half0 = random_integer_matrix(rng, u, u);
    const RatMatrix half1 = random_integer_matrix(rng, u, u);
    const RatMatrix a0 = half0 - half0.transposed();
    const RatMatrix a1 = half1 - half1.transposed();
    PolyMatrix family(u, u);
    for (int r = 0; r < u; ++r)
      for (int c = 0; c < u; ++c)
        family.at(r, c) = Poly(a0.at(r, c)) + t * Poly(a1.at(r, c));
    ++iter;
    REQUIRE(iter < 40 * kIterations);
    if (static_cast<int>(local_smith_exponents(family).size()) < u) continue;
    families.push_back(std::move(family));
  }

  for (const PolyMatrix& family : families) {
    const int u = family.rows();
    const CompleteCollineation cc = limit_skew(family, Context{u, u, u});
    const NodalChain chain = chain_from_collineation(cc);

    int previous_w_dim = 0;
    for (size_t j = 0; j < chain.components.size(); ++j) {
      const IsotropyReport report = isotropy_check(chain.components[j], PairingKind::symmetric);
      CHECK(report.isotropic);
      CHECK(report.maximal);
      // Intersections with V stay even along the whole chain, and the
      // W-intersection climbs by the even stage ranks.
      CHECK(report.v_intersection_parity == Parity::even);
      CHECK(*report.plus_component);
      const int w_dim = intersect_w(chain.components[j]).dim();
      CHECK((w_dim - previous_w_dim) % 2 == 0);
      CHECK(w_dim - previous_w_dim == (j == 0 ? 0 : cc.stages[j - 1].rank));
      previous_w_dim = w_dim;
    }
  }
}

TEST_CASE("isotropy checks demand a doubled split ambient") {
  CHECK_THROWS_AS(isotropy_check(canonicalize(4, RatMatrix({{1, 0, 0, 0}})),
                                 PairingKind::symplectic),
                  std::invalid_argument);
  CHECK_THROWS_AS(isotropy_check(canonicalize(3, RatMatrix({{1, 0, 0}}), Split{2, 1}),
                                 PairingKind::symmetric),
                  std::invalid_argument);
}
