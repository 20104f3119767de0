#include "clm/chain.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace clm {

namespace {

std::vector<int> iota_vec(int lo, int count) {
  std::vector<int> idx(static_cast<size_t>(count));
  std::iota(idx.begin(), idx.end(), lo);
  return idx;
}

// Coefficients x with x * b = m, for m inside the row space of b.
RatMatrix express_in_rows(const RatMatrix& b, const RatMatrix& m) {
  auto x = solve_linear(b.transposed(), m.transposed());
  if (!x) throw std::logic_error("express_in_rows: vectors outside the row space");
  return x->transposed();
}

// Rows (basis | 0) resp. (0 | basis) inside V (+) W.
RatMatrix embed_v(const RatMatrix& basis, const Split& s) {
  return basis.hstack(RatMatrix(basis.rows(), s.dim_w));
}
RatMatrix embed_w(const RatMatrix& basis, const Split& s) {
  return RatMatrix(basis.rows(), s.dim_v).hstack(basis);
}

}  // namespace

SinkSource sink_source(const Subspace& u_space) {
  if (!u_space.split()) throw std::invalid_argument("sink_source: subspace carries no V/W split");
  if (u_space.dim() < 1) throw std::domain_error("sink_source: subspace is zero-dimensional");
  const Split s = *u_space.split();
  const int n = s.dim_v + s.dim_w;
  SinkSource out;
  out.sink = canonicalize(
      n, embed_v(intersect_v(u_space).basis(), s).vstack(embed_w(project_w(u_space).basis(), s)), s);
  out.source = canonicalize(
      n, embed_v(project_v(u_space).basis(), s).vstack(embed_w(intersect_w(u_space).basis(), s)), s);
  return out;
}

ChainReport validate_chain(const NodalChain& chain) {
  ChainReport report;
  auto fail = [&report](std::string msg) {
    report.valid = false;
    report.violations.push_back(std::move(msg));
  };
  auto fail_eq = [&report, &fail](int eq, std::string msg) {
    if (std::find(report.violated_equations.begin(), report.violated_equations.end(), eq) ==
        report.violated_equations.end())
      report.violated_equations.push_back(eq);
    fail(std::move(msg));
  };

  try {
    check_context(chain.ctx);
  } catch (const std::exception& e) {
    fail(e.what());
    return report;
  }
  if (chain.components.empty()) {
    fail("chain has no components");
    return report;
  }
  const Split split{chain.ctx.dim_v, chain.ctx.dim_w};
  const int count = static_cast<int>(chain.components.size());
  for (int j = 0; j < count; ++j) {
    const Subspace& u_j = chain.components[static_cast<size_t>(j)];
    if (u_j.ambient() != split.dim_v + split.dim_w || u_j.split() != split) {
      fail("component " + std::to_string(j + 1) + " does not live in the context's V (+) W");
      return report;
    }
    if (u_j.dim() != chain.ctx.u) {
      fail("component " + std::to_string(j + 1) + " is not u-dimensional");
      return report;
    }
  }

  for (int j = 0; j < count; ++j) {
    const Subspace& u_j = chain.components[static_cast<size_t>(j)];
    const std::string tag = "component " + std::to_string(j + 1);
    if (intersect_v(u_j).dim() + intersect_w(u_j).dim() >= chain.ctx.u)
      fail_eq(1, tag + " is decomposable (equation 1)");
    report.shape.components.emplace_back(project_v(u_j).dim() - 1, project_w(u_j).dim() - 1);
  }
  if (intersect_w(chain.components.front()).dim() != 0)
    fail_eq(2, "first component meets W (equation 2)");
  if (intersect_v(chain.components.back()).dim() != 0)
    fail_eq(3, "last component meets V (equation 3)");
  for (int j = 0; j + 1 < count; ++j) {
    const Subspace& cur = chain.components[static_cast<size_t>(j)];
    const Subspace& next = chain.components[static_cast<size_t>(j + 1)];
    const std::string pair_tag = "components " + std::to_string(j + 1) + "/" + std::to_string(j + 2);
    if (!(intersect_v(cur) == project_v(next)))
      fail_eq(4, pair_tag + ": V-intersection differs from the next V-projection (equation 4)");
    if (!(intersect_w(next) == project_w(cur)))
      fail_eq(5, pair_tag + ": W-intersection differs from the previous W-projection (equation 5)");
    if (!(sink_source(cur).sink == sink_source(next).source)) report.adjacent = false;
  }
  std::sort(report.violated_equations.begin(), report.violated_equations.end());

  // Degree bookkeeping rides on the Pluecker support, which enumerates
  // subsets; skip it (total_degree stays -1) outside that oracle's limits.
  try {
    int total = 0;
    for (const Subspace& u_j : chain.components) total += plucker_weight_support(u_j).orbit_degree;
    report.total_degree = total;
    report.degree_matches = total == chain.ctx.u;
  } catch (const std::domain_error&) {
    report.total_degree = -1;
    report.degree_matches = false;
  }
  return report;
}

NodalChain chain_from_collineation(const CompleteCollineation& cc) {
  const ValidationReport check = validate_collineation(cc);
  if (!check.valid)
    throw std::domain_error("chain_from_collineation: " + check.violations.front());
  int total_rank = 0;
  for (const Stage& st : cc.stages) total_rank += st.rank;
  if (total_rank != cc.ctx.u)
    throw std::domain_error("chain_from_collineation: stage ranks do not exhaust the domain");

  const Split split{cc.ctx.dim_v, cc.ctx.dim_w};
  const std::vector<Subspace> domains = stage_domains(cc);
  const std::vector<Subspace> images = cumulative_images(cc);

  NodalChain chain;
  chain.ctx = cc.ctx;
  for (size_t j = 0; j < cc.stages.size(); ++j) {
    const RatMatrix& basis = domains[j].basis();
    const Subspace prev_image =
        j == 0 ? canonicalize(cc.ctx.dim_w, RatMatrix(0, cc.ctx.dim_w)) : images[j - 1];
    const CokernelModel model = cokernel_model(prev_image);
    RatMatrix rows = basis.hstack((model.section * cc.stages[j].map).transposed());
    rows = rows.vstack(embed_w(prev_image.basis(), split));
    chain.components.push_back(canonicalize(split.dim_v + split.dim_w, rows, split));
  }
  return chain;
}

CompleteCollineation collineation_from_chain(const NodalChain& chain) {
  const ChainReport report = validate_chain(chain);
  if (!report.valid)
    throw std::domain_error("collineation_from_chain: " +
                            (report.violations.empty() ? std::string("invalid chain") : report.violations.front()));

  CompleteCollineation cc;
  cc.ctx = chain.ctx;
  cc.flavor = Flavor::general;
  cc.domain = project_v(chain.components.front());
  for (const Subspace& u_j : chain.components) {
    const Subspace k_prev = project_v(u_j);
    const Subspace i_prev = intersect_w(u_j);
    const CokernelModel model = cokernel_model(i_prev);
    const RatMatrix v_block = u_j.basis().select(iota_vec(0, u_j.dim()), iota_vec(0, chain.ctx.dim_v));
    const RatMatrix w_block =
        u_j.basis().select(iota_vec(0, u_j.dim()), iota_vec(chain.ctx.dim_v, chain.ctx.dim_w));
    // One point of U_j over each echelon basis vector of its V-projection;
    // the W-part is well defined modulo U_j cap W, which the projection
    // kills.
    const RatMatrix lift = express_in_rows(v_block, k_prev.basis());
    const RatMatrix map = model.projection * (lift * w_block).transposed();
    const MapDecomposition dec = rank_kernel_cokernel(map);
    cc.stages.push_back({map, canonicalize(chain.ctx.dim_v, dec.kernel.basis() * k_prev.basis()), dec.rank});
  }
  return cc;
}

}  // namespace clm
