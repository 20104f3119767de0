#include "doctest.h"

#include <random>

#include "clm/collineation.hpp"
#include "test_support.hpp"

using namespace clm;
using testsupport::random_integer_matrix;
using testsupport::random_invertible;

namespace {
constexpr int kIterations = 120;

Poly P(std::initializer_list<int> coeffs) {
  std::vector<Rat> c;
  for (int x : coeffs) c.emplace_back(x);
  return Poly(std::move(c));
}

PolyMatrix M(std::initializer_list<std::initializer_list<Poly>> rows) {
  const int nr = static_cast<int>(rows.size());
  const int nc = static_cast<int>(rows.begin()->size());
  PolyMatrix m(nr, nc);
  int r = 0;
  for (const auto& row : rows) {
    int c = 0;
    for (const auto& p : row) m.at(r, c++) = p;
    ++r;
  }
  return m;
}

PolyMatrix random_poly_matrix(std::mt19937_64& rng, int rows, int cols, int max_deg = 2, int span = 3) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(-span, span);
  PolyMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      std::vector<Rat> cs(static_cast<size_t>(deg(rng)) + 1);
      for (auto& x : cs) x = coeff(rng);
      m.at(r, c) = Poly(std::move(cs));
    }
  return m;
}

std::vector<int> stage_ranks(const CompleteCollineation& cc) {
  std::vector<int> ranks;
  for (const Stage& st : cc.stages) ranks.push_back(st.rank);
  return ranks;
}

std::vector<int> flag_dims(const std::vector<Subspace>& chain) {
  std::vector<int> dims;
  for (const Subspace& s : chain) dims.push_back(s.dim());
  return dims;
}

// True when every bottom-right corner minor of a is nonzero; those are the
// minors the one-parameter torus degeneration makes leading.
bool trailing_minors_nonzero(const RatMatrix& a) {
  const int n = a.rows();
  for (int i = 1; i <= n; ++i) {
    std::vector<int> idx;
    for (int j = n - i; j < n; ++j) idx.push_back(j);
    if (determinant(a.select(idx, idx)) == 0) return false;
  }
  return true;
}
}  // namespace

TEST_CASE("diagonal families split into one stage per exponent jump") {
  const Context ctx{2, 2, 2};
  const CompleteCollineation cc = limit_collineation(M({{P({1}), P({})}, {P({}), P({0, 1})}}), ctx);
  REQUIRE(cc.stages.size() == 2);
  CHECK(cc.stages[0].map == RatMatrix({{1, 0}, {0, 0}}));
  CHECK(cc.stages[0].rank == 1);
  CHECK(cc.stages[0].kernel == canonicalize(2, RatMatrix({{0, 1}})));
  CHECK(cc.stages[1].map == RatMatrix({{1}}));
  CHECK(cc.stages[1].kernel.dim() == 0);
  CHECK(cc.domain.dim() == 2);
  CHECK(validate_collineation(cc).valid);

  const FlagPair fp = flags(cc);
  CHECK(flag_dims(fp.v_flag) == std::vector<int>{1, 0});
  CHECK(flag_dims(fp.w_flag) == std::vector<int>{1, 2});
  CHECK(fp.is_halphen);

  const CompleteCollineation cc3 =
      limit_collineation(M({{P({1}), P({}), P({})}, {P({}), P({0, 1}), P({})}, {P({}), P({}), P({0, 1})}}),
                         Context{3, 3, 3});
  CHECK(stage_ranks(cc3) == std::vector<int>{1, 2});
  CHECK(validate_collineation(cc3).valid);
  CHECK_FALSE(flags(cc3).is_halphen);
}

TEST_CASE("corrections flowing through the invertible block reach later stages") {
  // Restricting the next t-coefficient to the kernel would make both of
  // these limits collapse; the invariant factors say otherwise.
  const Context ctx{2, 2, 2};

  // Invariant-factor orders (0, 2), but the t-coefficient restricted to the
  // kernel of the first stage map is identically zero.
  const PolyMatrix hyperbola = M({{P({}), P({0, 1})}, {P({0, 1}), P({1})}});
  CHECK(local_smith_exponents(hyperbola) == std::vector<int>{0, 2});
  const CompleteCollineation cch = limit_collineation(hyperbola, ctx);
  CHECK(stage_ranks(cch) == std::vector<int>{1, 1});
  CHECK(cch.stages[1].map == RatMatrix({{-1}}));
  CHECK(validate_collineation(cch).valid);

  // Orders (0, 3): the order-two coefficient 6 that a plain restriction
  // would report is cancelled by the correction through the unit block.
  const PolyMatrix cancel = M({{P({1}), P({0, 3})}, {P({0, 2}), P({0, 0, 6, 1})}});
  CHECK(local_smith_exponents(cancel) == std::vector<int>{0, 3});
  const CompleteCollineation ccc = limit_collineation(cancel, ctx);
  CHECK(stage_ranks(ccc) == std::vector<int>{1, 1});
  CHECK(ccc.stages[1].map == RatMatrix({{1}}));
  CHECK(validate_collineation(ccc).valid);
}

TEST_CASE("stage ranks match the multiplicities of the invariant-factor orders") {
  std::mt19937_64 rng(20260817);
  std::uniform_int_distribution<int> upick(1, 4);
  std::uniform_int_distribution<int> extra(0, 2);
  for (int iter = 0; iter < kIterations; ++iter) {
    const int u = upick(rng);
    const Context ctx{u + extra(rng), u + extra(rng), u};
    const PolyMatrix family = random_poly_matrix(rng, ctx.dim_w, u);
    const std::vector<int> exps = local_smith_exponents(family);
    if (static_cast<int>(exps.size()) < u) {
      CHECK_THROWS_AS(limit_collineation(family, ctx), std::domain_error);
      continue;
    }
    const CompleteCollineation cc = limit_collineation(family, ctx);
    CHECK(stage_ranks(cc) == exponent_multiplicities(exps));
    CHECK(validate_collineation(cc).valid);
    int dim = u;
    for (const Stage& st : cc.stages) {
      dim -= st.rank;
      CHECK(st.kernel.dim() == dim);
    }
    CHECK(dim == 0);
  }
}

TEST_CASE("scaling by a power of t does not move the limit") {
  std::mt19937_64 rng(424243);
  int hits = 0;
  for (int iter = 0; iter < kIterations && hits < 40; ++iter) {
    const int u = 1 + iter % 3;
    const Context ctx{u, u + 1, u};
    const PolyMatrix family = random_poly_matrix(rng, u + 1, u);
    if (static_cast<int>(local_smith_exponents(family).size()) < u) continue;
    ++hits;
    const CompleteCollineation cc = limit_collineation(family, ctx);
    CHECK(limit_collineation(family.scaled_by_t(1), ctx) == cc);
    CHECK(limit_collineation(family.scaled_by_t(3), ctx) == cc);
  }
  CHECK(hits == 40);
}

TEST_CASE("first-order generic families follow the derivative rule") {
  std::mt19937_64 rng(777001);
  std::uniform_int_distribution<int> upick(2, 4);
  int hits = 0;
  for (int iter = 0; iter < kIterations; ++iter) {
    const int u = upick(rng);
    std::uniform_int_distribution<int> rpick(1, u - 1);
    const int r = rpick(rng);
    const RatMatrix a0 = random_integer_matrix(rng, u, r, 3) * random_integer_matrix(rng, r, u, 3);
    if (rank(a0) != r) continue;
    const RatMatrix a1 = random_integer_matrix(rng, u, u, 3);
    const RatMatrix kb = rank_kernel_cokernel(a0).kernel.basis();
    const RatMatrix proj = cokernel_model(canonicalize(u, a0.transposed())).projection;
    const RatMatrix derivative = proj * a1 * kb.transposed();
    if (rank(derivative) != u - r) continue;  // not first-order generic
    ++hits;
    const CompleteCollineation cc =
        limit_collineation(PolyMatrix::constant(a0) + PolyMatrix::constant(a1).scaled_by_t(1), Context{u, u, u});
    REQUIRE(cc.stages.size() == 2);
    CHECK(cc.stages[0].map == a0);
    CHECK(cc.stages[1].map == derivative);
    CHECK(validate_collineation(cc).valid);
  }
  CHECK(hits > kIterations / 2);
}

TEST_CASE("symmetric families limit to self-adjoint stages") {
  const CompleteCollineation fixed =
      limit_quadric(M({{P({1}), P({}), P({})}, {P({}), P({0, 1}), P({})}, {P({}), P({}), P({0, 1})}}),
                    Context{3, 3, 3});
  CHECK(stage_ranks(fixed) == std::vector<int>{1, 2});
  CHECK(fixed.flavor == Flavor::symmetric);
  CHECK(validate_collineation(fixed).valid);

  std::mt19937_64 rng(99173);
  std::uniform_int_distribution<int> upick(1, 4);
  for (int iter = 0; iter < kIterations; ++iter) {
    const int u = upick(rng);
    const PolyMatrix half = random_poly_matrix(rng, u, u);
    const PolyMatrix family = half + half.transposed();
    const Context ctx{u, u, u};
    const std::vector<int> exps = local_smith_exponents(family);
    if (static_cast<int>(exps.size()) < u) {
      CHECK_THROWS_AS(limit_quadric(family, ctx), std::domain_error);
      continue;
    }
    const CompleteCollineation cc = limit_quadric(family, ctx);
    CHECK(stage_ranks(cc) == exponent_multiplicities(exps));
    CHECK(validate_collineation(cc).valid);
  }
}

TEST_CASE("skew families limit to even-rank stages") {
  const PolyMatrix two_blocks = M({{P({}), P({1}), P({}), P({})},
                                   {P({-1}), P({}), P({}), P({})},
                                   {P({}), P({}), P({}), P({0, 1})},
                                   {P({}), P({}), P({0, -1}), P({})}});
  const CompleteCollineation fixed = limit_skew(two_blocks, Context{4, 4, 4});
  CHECK(stage_ranks(fixed) == std::vector<int>{2, 2});
  CHECK(fixed.stages[1].map == RatMatrix({{0, 1}, {-1, 0}}));
  CHECK(validate_collineation(fixed).valid);

  // A skew form on an odd-dimensional space keeps a null line.
  const PolyMatrix odd = M({{P({}), P({1}), P({})}, {P({-1}), P({}), P({})}, {P({}), P({}), P({})}});
  const CompleteCollineation null_line = limit_skew(odd, Context{3, 3, 3});
  REQUIRE(null_line.stages.size() == 1);
  CHECK(null_line.stages[0].rank == 2);
  CHECK(null_line.stages[0].kernel == canonicalize(3, RatMatrix({{0, 0, 1}})));
  CHECK(validate_collineation(null_line).valid);

  // Rank two on four dimensions leaves a plane: no complete limit exists.
  const PolyMatrix deficient = M({{P({}), P({1}), P({}), P({})},
                                  {P({-1}), P({}), P({}), P({})},
                                  {P({}), P({}), P({}), P({})},
                                  {P({}), P({}), P({}), P({})}});
  CHECK_THROWS_AS(limit_skew(deficient, Context{4, 4, 4}), std::domain_error);

  std::mt19937_64 rng(55088);
  for (int iter = 0; iter < kIterations; ++iter) {
    const int u = 2 + iter % 4;
    const PolyMatrix half = random_poly_matrix(rng, u, u);
    const PolyMatrix family = half - half.transposed();
    const Context ctx{u, u, u};
    const std::vector<int> exps = local_smith_exponents(family);
    if (u - static_cast<int>(exps.size()) > 1) {
      CHECK_THROWS_AS(limit_skew(family, ctx), std::domain_error);
      continue;
    }
    const CompleteCollineation cc = limit_skew(family, ctx);
    CHECK(stage_ranks(cc) == exponent_multiplicities(exps));
    for (const Stage& st : cc.stages) CHECK(st.rank % 2 == 0);
    CHECK(validate_collineation(cc).valid);
  }
}

TEST_CASE("torus degenerations of invertible matrices") {
  // Identity: the weights make each diagonal entry lead in turn.
  const CompleteCollineation id3 = halphen_degeneration(RatMatrix::identity(3));
  CHECK(stage_ranks(id3) == std::vector<int>{1, 1, 1});
  const FlagPair fp = flags(id3);
  CHECK(fp.is_halphen);
  CHECK(flag_dims(fp.v_flag) == std::vector<int>{2, 1, 0});
  CHECK(flag_dims(fp.w_flag) == std::vector<int>{1, 2, 3});
  CHECK(id3.stages[0].kernel == canonicalize(3, RatMatrix({{1, 0, 0}, {0, 1, 0}})));

  // The antidiagonal has a vanishing corner minor: both entries lead at
  // once and the limit stays a single full-rank stage.
  const CompleteCollineation anti = halphen_degeneration(RatMatrix({{0, 1}, {1, 0}}));
  CHECK(stage_ranks(anti) == std::vector<int>{2});
  CHECK_FALSE(flags(anti).is_halphen);

  std::mt19937_64 rng(31337);
  for (int iter = 0; iter < 60; ++iter) {
    const int u = 2 + iter % 4;
    const RatMatrix a = random_invertible(rng, u, 4);
    const CompleteCollineation cc = halphen_degeneration(a);
    CHECK(validate_collineation(cc).valid);
    // Nonvanishing corner minors make the weights strictly separate the
    // stages.  (The converse fails: zeroing the corner entry re-centers the
    // normalization, so vanishing corner minors may still yield rank ones.)
    if (trailing_minors_nonzero(a)) {
      CHECK(flags(cc).is_halphen);
      CHECK(cc.stages.size() == static_cast<size_t>(u));
    }
  }
}

TEST_CASE("invalid limit inputs are rejected") {
  const Context ctx{2, 2, 2};
  CHECK_THROWS_AS(limit_collineation(PolyMatrix(2, 2), ctx), std::domain_error);
  CHECK_THROWS_AS(limit_collineation(PolyMatrix(3, 2), ctx), std::invalid_argument);
  CHECK_THROWS_AS(limit_collineation(PolyMatrix(2, 2), Context{1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(limit_collineation(M({{P({1}), P({})}, {P({}), P({1})}}), Context{3, 2, 2}, Flavor::symmetric),
                  std::invalid_argument);
  CHECK_THROWS_AS(limit_quadric(M({{P({}), P({1})}, {P({2}), P({})}}), ctx), std::domain_error);
  CHECK_THROWS_AS(limit_skew(M({{P({1}), P({1})}, {P({-1}), P({})}}), ctx), std::domain_error);
  CHECK_THROWS_AS(halphen_degeneration(RatMatrix({{1, 1}, {1, 1}})), std::domain_error);
  CHECK_THROWS_AS(halphen_degeneration(RatMatrix(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(flavor_from_name("sideways"), std::invalid_argument);
  CHECK(flavor_from_name(flavor_name(Flavor::skew)) == Flavor::skew);
}

TEST_CASE("validation reports corrupted collineations") {
  const CompleteCollineation good =
      limit_collineation(M({{P({1}), P({}), P({})}, {P({}), P({0, 1}), P({})}, {P({}), P({}), P({0, 0, 1})}}),
                         Context{3, 3, 3});
  REQUIRE(validate_collineation(good).valid);

  CompleteCollineation bad_rank = good;
  bad_rank.stages[0].rank = 2;
  const ValidationReport r1 = validate_collineation(bad_rank);
  CHECK_FALSE(r1.valid);
  CHECK(r1.violations.front().find("rank") != std::string::npos);

  CompleteCollineation bad_kernel = good;
  bad_kernel.stages[0].kernel = canonicalize(3, RatMatrix({{1, 0, 0}, {0, 1, 0}}));
  CHECK_FALSE(validate_collineation(bad_kernel).valid);

  CompleteCollineation truncated = good;
  truncated.stages.pop_back();
  const ValidationReport r2 = validate_collineation(truncated);
  CHECK_FALSE(r2.valid);
  CHECK(r2.violations.front().find("injective") != std::string::npos);

  CompleteCollineation zero_map = good;
  zero_map.stages[1].map = RatMatrix(2, 2);
  CHECK_FALSE(validate_collineation(zero_map).valid);

  // A single full-rank symmetric stage relabeled as skew: the induced form
  // is symmetric, not antisymmetric.
  CompleteCollineation relabeled = limit_collineation(M({{P({1}), P({})}, {P({}), P({1})}}), Context{2, 2, 2});
  relabeled.flavor = Flavor::skew;
  const ValidationReport r3 = validate_collineation(relabeled);
  CHECK_FALSE(r3.valid);
  CHECK(r3.violations.front().find("antisymmetric") != std::string::npos);
}

TEST_CASE("limits are deterministic") {
  std::mt19937_64 rng(86);
  const PolyMatrix family = random_poly_matrix(rng, 4, 3);
  if (local_smith_exponents(family).size() == 3) {
    const Context ctx{3, 4, 3};
    CHECK(limit_collineation(family, ctx) == limit_collineation(family, ctx));
  }
}
