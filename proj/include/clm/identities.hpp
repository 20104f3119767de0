#pragma once

#include <vector>

#include "clm/rat.hpp"

namespace clm {

struct IdentityResult {
  Int lhs;
  Int rhs;
  bool equal = false;

  bool operator==(const IdentityResult&) const = default;
};

// The section-count identity
//   sum_{i=0}^{u-1} C(u-2-i+k, k-1) * C(i+k, k)  ==  C(u-1+2k, 2k)
// for u, k >= 1.  Both sides are computed independently and compared.
IdentityResult section_dim_identity(int u, int k);

// Two truncated power series over exact integers, coefficients for
// x^0 .. x^order, compared coefficientwise.
struct SeriesCheck {
  std::vector<Int> lhs;
  std::vector<Int> rhs;
  bool equal = false;

  bool operator==(const SeriesCheck&) const = default;
};

// The generating-function identity behind the summation:
//   sum_{r=0}^{order} C(r, j) x^r  ==  x^j / (1-x)^(j+1)
// with the right side expanded by repeated truncated multiplication rather
// than through binomials, so the two routes are independent.  Needs
// order > j >= 0.
SeriesCheck snake_oil_check(int j, int order);

// Consequence of the identity: the series of either side of
// section_dim_identity in the variable x^(u-1) is (1-x)^(-1-2k).
struct SectionSeriesCheck {
  std::vector<Int> summation;    // sum-route coefficients, u = 1..order+1
  std::vector<Int> closed_form;  // C(u-1+2k, 2k) route
  std::vector<Int> expansion;    // truncated power of the geometric series
  bool equal = false;

  bool operator==(const SectionSeriesCheck&) const = default;
};

SectionSeriesCheck section_series_check(int k, int order);

}  // namespace clm
