#include "doctest.h"

#include <random>

#include "clm/polymatrix.hpp"
#include "test_support.hpp"

using namespace clm;
using testsupport::random_invertible;
using testsupport::random_rat;

namespace {
constexpr int kIterations = 200;

Poly P(std::initializer_list<int> coeffs) {
  std::vector<Rat> c;
  for (int x : coeffs) c.emplace_back(x);
  return Poly(std::move(c));
}

PolyMatrix random_poly_matrix(std::mt19937_64& rng, int rows, int cols, int max_deg = 3, int span = 3) {
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

PolyMatrix diag_t_powers(const std::vector<int>& exps) {
  PolyMatrix m(static_cast<int>(exps.size()), static_cast<int>(exps.size()));
  for (size_t i = 0; i < exps.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = Poly::t_power(exps[i]);
  return m;
}

// Reference path for the invariant-factor orders: consecutive differences of
// the minimal minor valuations, computed entirely by direct expansion.
std::vector<int> exponents_via_minors(const PolyMatrix& m) {
  std::vector<int> exps;
  int prev = 0;
  for (int i = 1; i <= std::min(m.rows(), m.cols()); ++i) {
    const auto v = minor_valuation(m, i);
    if (!v) break;
    exps.push_back(*v - prev);
    prev = *v;
  }
  return exps;
}
}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  const Poly a = P({1, 2});       // 1 + 2t
  const Poly b = P({0, 0, 3});    // 3t^2
  CHECK((a * b) == P({0, 0, 3, 6}));
  CHECK((a + b) == P({1, 2, 3}));
  CHECK((a - a).is_zero());
  CHECK(b.valuation() == 2);
  CHECK(Poly().valuation() == -1);
  CHECK(a.eval(Rat(1, 2)) == 2);
  CHECK(b.shifted(-2) == P({3}));
  CHECK_THROWS_AS(a.shifted(-1), std::domain_error);
  CHECK(P({1, 2, 3, 4}).mod_t_pow(2) == P({1, 2}));
}

TEST_CASE("series quotient is exact in the local ring") {
  std::mt19937_64 rng(101);
  for (int it = 0; it < kIterations; ++it) {
    // b a unit times t^v, a a multiple of t^v
    std::uniform_int_distribution<int> val(0, 3);
    const int v = val(rng);
    Poly b = P({0});
    while (b.coeff(0) == 0) {
      std::vector<Rat> cs(4);
      for (auto& x : cs) x = random_rat(rng);
      b = Poly(std::move(cs));
    }
    std::vector<Rat> cs(5);
    for (auto& x : cs) x = random_rat(rng);
    const Poly a = Poly(std::move(cs)).shifted(v);
    const Poly bs = b.shifted(v);
    const int cap = 12;
    const Poly q = series_quotient(a, bs, cap);
    CHECK(mul_mod(q, bs, cap) == a.mod_t_pow(cap));
  }
  CHECK_THROWS_AS(series_quotient(P({1}), P({0, 1}), 8), std::domain_error);
  CHECK_THROWS_AS(series_quotient(P({1}), Poly(), 8), std::domain_error);
}

TEST_CASE("entry valuation") {
  PolyMatrix m(2, 2);
  m.at(0, 1) = P({0, 0, 5});
  m.at(1, 0) = P({0, 7});
  CHECK(entry_valuation(m) == 1);
  CHECK_THROWS_AS(entry_valuation(PolyMatrix(2, 3)), std::domain_error);
}

TEST_CASE("polynomial determinant matches evaluation") {
  std::mt19937_64 rng(555);
  for (int it = 0; it < kIterations; ++it) {
    const PolyMatrix m = random_poly_matrix(rng, 4, 4);
    const Poly d = poly_determinant(m);
    for (int k = 0; k < 3; ++k) {
      const Rat x = random_rat(rng);
      CHECK(d.eval(x) == determinant(m.eval(x)));
    }
  }
}

TEST_CASE("local smith exponents, fixed cases") {
  CHECK(local_smith_exponents(diag_t_powers({0, 1, 2})) == std::vector<int>{0, 1, 2});
  CHECK(local_smith_exponents(diag_t_powers({1, 1})) == std::vector<int>{1, 1});

  PolyMatrix m(2, 2);  // [[1, 1], [1, 1 + t^2]]
  m.at(0, 0) = P({1});
  m.at(0, 1) = P({1});
  m.at(1, 0) = P({1});
  m.at(1, 1) = P({1, 0, 1});
  CHECK(local_smith_exponents(m) == std::vector<int>{0, 2});

  PolyMatrix r1(2, 2);  // rank 1 over Q(t): [[1, t], [t, t^2]]
  r1.at(0, 0) = P({1});
  r1.at(0, 1) = P({0, 1});
  r1.at(1, 0) = P({0, 1});
  r1.at(1, 1) = P({0, 0, 1});
  CHECK(local_smith_exponents(r1) == std::vector<int>{0});

  CHECK(local_smith_exponents(PolyMatrix(3, 3)).empty());
}

TEST_CASE("local smith exponents agree with direct minor valuations") {
  std::mt19937_64 rng(777);
  for (int it = 0; it < kIterations; ++it) {
    const PolyMatrix m = random_poly_matrix(rng, 4, 4, 3, 2);
    if (m.is_zero()) continue;
    CHECK(local_smith_exponents(m) == exponents_via_minors(m));
  }
}

TEST_CASE("local smith exponents are invariant under constant unimodular transforms") {
  std::mt19937_64 rng(888);
  for (int it = 0; it < 60; ++it) {
    const PolyMatrix m = random_poly_matrix(rng, 4, 4, 2, 2);
    if (m.is_zero()) continue;
    const PolyMatrix p = PolyMatrix::constant(random_invertible(rng, 4));
    const PolyMatrix q = PolyMatrix::constant(random_invertible(rng, 4));
    CHECK(local_smith_exponents(p * m * q) == local_smith_exponents(m));
  }
}

TEST_CASE("scaling by a power of t shifts every exponent") {
  std::mt19937_64 rng(999);
  for (int it = 0; it < 60; ++it) {
    const PolyMatrix m = random_poly_matrix(rng, 3, 3, 2, 2);
    if (m.is_zero()) continue;
    std::vector<int> shifted = local_smith_exponents(m.scaled_by_t(2));
    std::vector<int> base = local_smith_exponents(m);
    REQUIRE(shifted.size() == base.size());
    for (size_t i = 0; i < base.size(); ++i) CHECK(shifted[i] == base[i] + 2);
  }
}

TEST_CASE("minor valuation, fixed cases") {
  const PolyMatrix d = diag_t_powers({0, 1, 3});
  CHECK(minor_valuation(d, 1) == 0);
  CHECK(minor_valuation(d, 2) == 1);
  CHECK(minor_valuation(d, 3) == 4);

  PolyMatrix r1(2, 2);  // rank 1: all 2x2 minors vanish
  r1.at(0, 0) = P({1});
  r1.at(0, 1) = P({0, 1});
  r1.at(1, 0) = P({0, 1});
  r1.at(1, 1) = P({0, 0, 1});
  CHECK(minor_valuation(r1, 2) == std::nullopt);
  CHECK_THROWS_AS(minor_valuation(r1, 0), std::invalid_argument);
  CHECK_THROWS_AS(minor_valuation(r1, 3), std::invalid_argument);
}

TEST_CASE("exponent multiplicities") {
  CHECK(exponent_multiplicities({0, 0, 1, 3, 3, 3}) == std::vector<int>{2, 1, 3});
  CHECK(exponent_multiplicities({}).empty());
}

TEST_CASE("laurent ingestion normalizes to valuation zero") {
  // Entries a_ij * t^(-i-j) for a = [[1, 1], [1, 2]], 1-based i, j.
  std::vector<std::vector<LaurentTerm>> entries = {
      {{-2, Rat(1)}}, {{-3, Rat(1)}}, {{-3, Rat(1)}}, {{-4, Rat(2)}}};
  const LaurentNormalized n = normalize_laurent(2, 2, entries);
  CHECK(n.shift == 4);
  CHECK(n.matrix.at(0, 0) == P({0, 0, 1}));
  CHECK(n.matrix.at(0, 1) == P({0, 1}));
  CHECK(n.matrix.at(1, 0) == P({0, 1}));
  CHECK(n.matrix.at(1, 1) == P({2}));
  CHECK(entry_valuation(n.matrix) == 0);

  // Cancelling terms are dropped before the shift is chosen.
  std::vector<std::vector<LaurentTerm>> cancel = {{{-5, Rat(1)}, {-5, Rat(-1)}, {2, Rat(3)}}};
  const LaurentNormalized c = normalize_laurent(1, 1, cancel);
  CHECK(c.shift == -2);
  CHECK(c.matrix.at(0, 0) == P({3}));
}
