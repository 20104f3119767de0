#include "clm/identities.hpp"

#include <stdexcept>

namespace clm {
namespace {

// Coefficients of (1-x)^(-power) up to x^order.  Multiplying a truncated
// series by 1/(1-x) is a running prefix sum, so the expansion needs no
// binomial machinery at all.
std::vector<Int> geometric_power(int power, int order) {
  std::vector<Int> coeffs(static_cast<size_t>(order) + 1);
  coeffs[0] = 1;
  for (int round = 0; round < power; ++round)
    for (int m = 1; m <= order; ++m) coeffs[m] += coeffs[m - 1];
  return coeffs;
}

}  // namespace

IdentityResult section_dim_identity(int u, int k) {
  if (u < 1 || k < 1)
    throw std::invalid_argument("section_dim_identity: u and k must be positive");
  IdentityResult result;
  for (int i = 0; i < u; ++i)
    result.lhs += binomial(u - 2 - i + k, k - 1) * binomial(i + k, k);
  result.rhs = binomial(u - 1 + 2 * k, 2 * k);
  result.equal = result.lhs == result.rhs;
  return result;
}

SeriesCheck snake_oil_check(int j, int order) {
  if (j < 0 || order <= j)
    throw std::invalid_argument("snake_oil_check: need order > j >= 0");
  SeriesCheck check;
  check.lhs.resize(static_cast<size_t>(order) + 1);
  for (int r = 0; r <= order; ++r) check.lhs[r] = binomial(r, j);

  // x^j / (1-x)^(j+1), expanded without binomials and shifted by j.
  const std::vector<Int> expansion = geometric_power(j + 1, order);
  check.rhs.resize(static_cast<size_t>(order) + 1);
  for (int r = j; r <= order; ++r) check.rhs[r] = expansion[r - j];

  check.equal = check.lhs == check.rhs;
  return check;
}

SectionSeriesCheck section_series_check(int k, int order) {
  if (k < 1 || order < 0)
    throw std::invalid_argument("section_series_check: need k >= 1 and order >= 0");
  SectionSeriesCheck check;
  for (int u = 1; u <= order + 1; ++u) {
    const IdentityResult term = section_dim_identity(u, k);
    check.summation.push_back(term.lhs);
    check.closed_form.push_back(term.rhs);
  }
  check.expansion = geometric_power(2 * k + 1, order);
  check.equal =
      check.summation == check.expansion && check.closed_form == check.expansion;
  return check;
}

}  // namespace clm
