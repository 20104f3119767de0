#include "clm/stability.hpp"

#include <numeric>
#include <stdexcept>

namespace clm {

std::string stability_name(Stability s) {
  switch (s) {
    case Stability::stable:
      return "stable";
    case Stability::strictly_semistable:
      return "strictly-semistable";
    case Stability::unstable:
      return "unstable";
  }
  throw std::logic_error("unknown stability");
}

Stability stability_from_name(const std::string& name) {
  if (name == "stable") return Stability::stable;
  if (name == "strictly-semistable") return Stability::strictly_semistable;
  if (name == "unstable") return Stability::unstable;
  throw std::invalid_argument("unknown stability: " + name);
}

namespace {

const Split& require_split(const Subspace& u_space, const char* who) {
  if (!u_space.split()) throw std::invalid_argument(std::string(who) + ": subspace carries no V/W split");
  if (u_space.dim() < 1) throw std::domain_error(std::string(who) + ": subspace is zero-dimensional");
  return *u_space.split();
}

}  // namespace

StabilityReport classify(const Subspace& u_space, const Rat& sigma) {
  require_split(u_space, "classify");
  const int u = u_space.dim();

  StabilityReport report;
  report.sigma = sigma;
  report.dim_u_cap_v = intersect_v(u_space).dim();
  report.dim_u_cap_w = intersect_w(u_space).dim();
  report.interval_lo = report.dim_u_cap_w;
  report.interval_hi = u - report.dim_u_cap_v;

  const bool v_ok = Rat(report.dim_u_cap_v) <= Rat(u) - sigma;
  const bool w_ok = Rat(report.dim_u_cap_w) <= sigma;
  const bool v_tight = Rat(report.dim_u_cap_v) == Rat(u) - sigma;
  const bool w_tight = Rat(report.dim_u_cap_w) == sigma;
  if (!v_ok || !w_ok) {
    report.status = Stability::unstable;
  } else if (v_tight || w_tight) {
    report.status = Stability::strictly_semistable;
    // On the wall the quotient identifies U with its graded pieces: the
    // intersection that became tight together with the complementary
    // projection.
    if (v_tight)
      report.graded = GradedObject{intersect_v(u_space), project_w(u_space)};
    else
      report.graded = GradedObject{project_v(u_space), intersect_w(u_space)};
  } else {
    report.status = Stability::stable;
  }
  return report;
}

WeightSupport plucker_weight_support(const Subspace& u_space) {
  const Split split = require_split(u_space, "plucker_weight_support");
  const int u = u_space.dim();
  const int n = u_space.ambient();
  if (u > 6 || n > 14)
    throw std::domain_error("plucker_weight_support: subset enumeration is limited to u <= 6 and ambient <= 14");

  std::vector<int> all_rows(static_cast<size_t>(u));
  std::iota(all_rows.begin(), all_rows.end(), 0);

  std::vector<int> cols(static_cast<size_t>(u));
  std::iota(cols.begin(), cols.end(), 0);
  std::vector<char> seen(static_cast<size_t>(2 * u + 1), 0);
  while (true) {
    if (determinant(u_space.basis().select(all_rows, cols)) != 0) {
      int a = 0;
      for (int c : cols)
        if (c < split.dim_v) ++a;
      seen[static_cast<size_t>(2 * a - u + u)] = 1;  // weight 2a - u, offset by u
    }
    // next u-subset of {0, ..., n-1} in lexicographic order
    int i = u - 1;
    while (i >= 0 && cols[static_cast<size_t>(i)] == n - u + i) --i;
    if (i < 0) break;
    ++cols[static_cast<size_t>(i)];
    for (int j = i + 1; j < u; ++j) cols[static_cast<size_t>(j)] = cols[static_cast<size_t>(j - 1)] + 1;
  }

  WeightSupport support;
  for (int w = -u; w <= u; ++w)
    if (seen[static_cast<size_t>(w + u)]) support.weights.push_back(w);
  if (support.weights.size() > 1) {
    int g = 0;
    for (int w : support.weights) g = std::gcd(g, w - support.weights.front());
    support.orbit_degree = (support.weights.back() - support.weights.front()) / g;
  }
  return support;
}

bool weight_semistable(const WeightSupport& support, int u, const Rat& sigma) {
  if (support.weights.empty()) throw std::invalid_argument("weight_semistable: empty support");
  const Rat target = Rat(u) - Rat(2) * sigma;
  return Rat(support.weights.front()) <= target && target <= Rat(support.weights.back());
}

bool semistable_oracle_equivalence(const Subspace& u_space, const Rat& sigma) {
  const StabilityReport report = classify(u_space, sigma);
  const bool by_weights = weight_semistable(plucker_weight_support(u_space), u_space.dim(), sigma);
  return (report.status != Stability::unstable) == by_weights;
}

DimReport dims_report(const Context& ctx, Flavor flavor) {
  check_context(ctx);
  if (flavor != Flavor::general && (ctx.dim_v != ctx.u || ctx.dim_w != ctx.u))
    throw std::invalid_argument("dims_report: symmetric and skew flavors require dim_v == dim_w == u");
  const long v = ctx.dim_v, w = ctx.dim_w, u = ctx.u;

  DimReport report;
  report.ctx = ctx;
  report.flavor = flavor;
  report.dim_quotient = u * (v + w - u) - 1;
  for (int k = 0; k <= ctx.u; ++k)
    if (flavor != Flavor::skew || k % 2 == 0) report.walls.push_back(k);
  for (long k = 1; k < u; ++k) {
    WallLocus locus;
    locus.k = static_cast<int>(k);
    locus.dim_z0 = (u - k) * (v - u + k) + k * (w - k);
    locus.dim_z_minus = locus.dim_z0 + k * (v - u + k) - 1;
    locus.dim_z_plus = locus.dim_z0 + (u - k) * (w - k) - 1;
    locus.dim_secant = u * (v - u) + k * (u + w - k) - 1;
    report.loci.push_back(locus);
  }
  report.dim_end_v = u * (v - u) + u * w - 1;
  report.dim_end_w = u * (w - u) + u * v - 1;
  if (report.dim_end_v != report.dim_quotient || report.dim_end_w != report.dim_quotient)
    throw std::logic_error("dims_report: end-chamber bundle counts disagree with the quotient dimension");
  return report;
}

}  // namespace clm
