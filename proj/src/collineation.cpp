#include "clm/collineation.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace clm {

std::string flavor_name(Flavor f) {
  switch (f) {
    case Flavor::general:
      return "general";
    case Flavor::symmetric:
      return "symmetric";
    case Flavor::skew:
      return "skew";
  }
  throw std::logic_error("unknown flavor");
}

Flavor flavor_from_name(const std::string& name) {
  if (name == "general") return Flavor::general;
  if (name == "symmetric") return Flavor::symmetric;
  if (name == "skew") return Flavor::skew;
  throw std::invalid_argument("unknown flavor: " + name);
}

void check_context(const Context& ctx) {
  if (ctx.u < 1) throw std::invalid_argument("context: u must be positive");
  if (ctx.u > ctx.dim_v || ctx.u > ctx.dim_w)
    throw std::invalid_argument("context: u must be at most min(dim_v, dim_w)");
}

namespace {

// Pivot columns of a matrix already in reduced row echelon form.
std::vector<int> echelon_pivots(const RatMatrix& rref) {
  std::vector<int> pivots;
  int c = 0;
  for (int r = 0; r < rref.rows(); ++r) {
    while (c < rref.cols() && rref.at(r, c) == 0) ++c;
    pivots.push_back(c);
  }
  return pivots;
}

std::vector<int> complement_indices(const std::vector<int>& taken, int n) {
  std::vector<char> used(static_cast<size_t>(n), 0);
  for (int p : taken) used[static_cast<size_t>(p)] = 1;
  std::vector<int> rest;
  for (int i = 0; i < n; ++i)
    if (!used[static_cast<size_t>(i)]) rest.push_back(i);
  return rest;
}

std::vector<int> index_range(int lo, int hi) {
  std::vector<int> idx(static_cast<size_t>(hi - lo));
  std::iota(idx.begin(), idx.end(), lo);
  return idx;
}

// n x k selection matrix with unit columns at the given coordinates.
RatMatrix unit_columns(int n, const std::vector<int>& idx) {
  RatMatrix m(n, static_cast<int>(idx.size()));
  for (size_t j = 0; j < idx.size(); ++j) m.at(idx[j], static_cast<int>(j)) = 1;
  return m;
}

// Coefficients x with x * b = m, for m inside the row space of b.
RatMatrix express_in_rows(const RatMatrix& b, const RatMatrix& m) {
  auto x = solve_linear(b.transposed(), m.transposed());
  if (!x) throw std::logic_error("express_in_rows: vectors outside the row space");
  return x->transposed();
}

// Unique y with d * y = rhs mod t^cap; d(0) must be invertible.
PolyMatrix series_solve(const PolyMatrix& d, const PolyMatrix& rhs, int cap) {
  const RatMatrix d0_inv = inverse(d.coefficient(0));
  std::vector<RatMatrix> y;
  y.reserve(static_cast<size_t>(cap));
  for (int m = 0; m < cap; ++m) {
    RatMatrix acc = rhs.coefficient(m);
    for (int i = 1; i <= m; ++i) acc = acc - d.coefficient(i) * y[static_cast<size_t>(m - i)];
    y.push_back(d0_inv * acc);
  }
  PolyMatrix out(d.cols(), rhs.cols());
  for (int r = 0; r < out.rows(); ++r)
    for (int c = 0; c < out.cols(); ++c) {
      std::vector<Rat> coeffs(static_cast<size_t>(cap));
      for (int m = 0; m < cap; ++m) coeffs[static_cast<size_t>(m)] = y[static_cast<size_t>(m)].at(r, c);
      out.at(r, c) = Poly(std::move(coeffs));
    }
  return out;
}

Subspace zero_subspace(int ambient) { return canonicalize(ambient, RatMatrix(0, ambient)); }

// Extend a cumulative image I by the image of a stage map given in the
// cokernel model of I: lift the model image back to W through the section.
Subspace grow_image(const Subspace& image, const CokernelModel& model, const RatMatrix& map) {
  const Subspace local = canonicalize(map.rows(), map.transposed());
  return canonicalize(image.ambient(), image.basis().vstack(local.basis() * model.section.transposed()));
}

void check_pairing_input(const PolyMatrix& family, const Context& ctx, bool skew) {
  if (ctx.dim_v != ctx.u || ctx.dim_w != ctx.u)
    throw std::invalid_argument("pairing flavors require dim_v == dim_w == u");
  if (family.rows() != ctx.u || family.cols() != ctx.u)
    throw std::invalid_argument("family must be u x u");
  for (int r = 0; r < family.rows(); ++r) {
    if (skew && !(family.at(r, r) == Poly()))
      throw std::domain_error("family is not antisymmetric: nonzero diagonal entry");
    for (int c = r + 1; c < family.cols(); ++c) {
      const bool ok = skew ? family.at(r, c) + family.at(c, r) == Poly() : family.at(r, c) == family.at(c, r);
      if (!ok)
        throw std::domain_error(skew ? "family is not antisymmetric" : "family is not symmetric");
    }
  }
}

// For the symmetric and skew flavors each stage map f: K -> W/I turns into a
// bilinear form on K via the pairing between V and W: <a, b> = (f a)(b),
// well defined because I annihilates K.  Record any stage whose form fails to
// be symmetric (resp. antisymmetric), and any stage where I does not
// annihilate the running domain.
void collect_pairing_violations(const CompleteCollineation& cc, std::vector<std::string>* out) {
  RatMatrix b = cc.domain.basis();
  Subspace image = zero_subspace(cc.ctx.dim_w);
  for (size_t j = 0; j < cc.stages.size(); ++j) {
    const Stage& st = cc.stages[j];
    const std::string where = "stage " + std::to_string(j + 1) + ": ";
    const CokernelModel model = cokernel_model(image);
    if (!(image.basis() * b.transposed()).is_zero())
      out->push_back(where + "cumulative image does not annihilate the stage domain");
    const RatMatrix pairing = st.map.transposed() * (b * model.section).transposed();
    const bool ok = cc.flavor == Flavor::skew ? (pairing + pairing.transposed()).is_zero()
                                              : (pairing - pairing.transposed()).is_zero();
    if (!ok)
      out->push_back(where + (cc.flavor == Flavor::skew ? "induced form is not antisymmetric"
                                                        : "induced form is not symmetric"));
    image = grow_image(image, model, st.map);
    b = st.kernel.basis();
  }
}

}  // namespace

CompleteCollineation limit_collineation(const PolyMatrix& family, const Context& ctx, Flavor flavor) {
  check_context(ctx);
  if (flavor != Flavor::general && (ctx.dim_v != ctx.u || ctx.dim_w != ctx.u))
    throw std::invalid_argument("limit_collineation: symmetric and skew flavors require dim_v == dim_w == u");
  if (family.rows() != ctx.dim_w || family.cols() != ctx.u)
    throw std::invalid_argument("limit_collineation: family must be dim_w x u");
  if (family.is_zero()) throw std::domain_error("limit_collineation: family is identically zero");

  const int cap = smith_truncation_bound(family);

  CompleteCollineation cc;
  cc.ctx = ctx;
  cc.flavor = flavor;
  RatMatrix dom(ctx.u, ctx.dim_v);
  for (int i = 0; i < ctx.u; ++i) dom.at(i, i) = 1;
  cc.domain = canonicalize(ctx.dim_v, dom);

  RatMatrix k_basis = cc.domain.basis();
  Subspace image = zero_subspace(ctx.dim_w);
  CokernelModel model = cokernel_model(image);
  // The running family, written in canonical coordinates: columns over the
  // echelon basis of the current domain, rows over the cokernel model of the
  // cumulative image.  All arithmetic is truncated mod t^cap, which is exact
  // for every order the extraction ever consults.
  PolyMatrix rest = family.mod_t_pow(cap);

  while (k_basis.rows() > 0) {
    if (rest.is_zero()) {
      // A skew form on an odd-dimensional space leaves a line in its null
      // space; anything else means the family's generic rank is too small.
      if (flavor == Flavor::skew && k_basis.rows() == 1) break;
      throw std::domain_error("limit_collineation: family degenerates on a " +
                              std::to_string(k_basis.rows()) + "-dimensional part of the domain");
    }
    // Scaling by a power of t does not move the limit (the family is only
    // meaningful up to scale), so normalize to valuation zero; the stage map
    // is then the value at t = 0.
    const int val = entry_valuation(rest);
    if (val > 0) rest = rest.scaled_by_t(-val);
    const RatMatrix f = rest.coefficient(0);
    MapDecomposition dec = rank_kernel_cokernel(f);
    const RatMatrix n = dec.kernel.basis();
    cc.stages.push_back({f, canonicalize(ctx.dim_v, n * k_basis), dec.rank});

    const Subspace model_image = canonicalize(f.rows(), f.transposed());
    image = canonicalize(ctx.dim_w, image.basis().vstack(model_image.basis() * model.section.transposed()));

    if (n.rows() == 0) break;  // injective stage: domain exhausted

    // Schur complement of the block the stage map makes invertible.  Split
    // the model domain as E (+) ker(f) and the model codomain as im(f) (+) G,
    // with E and G spanned by unit vectors at non-pivot coordinates; in these
    // bases the family reads [[d, b], [c, a]] with d(0) invertible, and
    // a - c d^{-1} b carries exactly the stages still to be extracted.  (A
    // plain restriction of the next t-coefficient would lose the corrections
    // that flow through the invertible block.)
    const int r = dec.rank;
    const std::vector<int> e_cols = complement_indices(echelon_pivots(n), rest.cols());
    const std::vector<int> g_rows = complement_indices(echelon_pivots(model_image.basis()), rest.rows());
    const RatMatrix t_dom = unit_columns(rest.cols(), e_cols).hstack(n.transposed());
    const RatMatrix t_cod = model_image.basis().transposed().hstack(unit_columns(rest.rows(), g_rows));
    const PolyMatrix tilted = PolyMatrix::constant(inverse(t_cod)) * rest * PolyMatrix::constant(t_dom);

    const std::vector<int> top = index_range(0, r);
    const std::vector<int> bottom = index_range(r, rest.rows());
    const std::vector<int> right = index_range(r, rest.cols());
    const PolyMatrix y = series_solve(tilted.select(top, top), tilted.select(top, right), cap);
    const PolyMatrix schur = (tilted.select(bottom, right) - tilted.select(bottom, top) * y).mod_t_pow(cap);

    // Transport the complement to the canonical coordinates of the next
    // stage: echelon basis of the new kernel on the domain side, cokernel
    // model of the grown image on the codomain side.
    const RatMatrix k_next = cc.stages.back().kernel.basis();
    const CokernelModel next = cokernel_model(image);
    const RatMatrix x = express_in_rows(n * k_basis, k_next);
    const RatMatrix cod_change = next.projection * (model.section * unit_columns(rest.rows(), g_rows));
    rest = (PolyMatrix::constant(cod_change) * schur * PolyMatrix::constant(x.transposed())).mod_t_pow(cap);
    k_basis = k_next;
    model = next;
  }
  return cc;
}

CompleteCollineation limit_quadric(const PolyMatrix& family, const Context& ctx) {
  check_pairing_input(family, ctx, /*skew=*/false);
  CompleteCollineation cc = limit_collineation(family, ctx, Flavor::symmetric);
  std::vector<std::string> violations;
  collect_pairing_violations(cc, &violations);
  if (!violations.empty()) throw std::logic_error("limit_quadric: " + violations.front());
  return cc;
}

CompleteCollineation limit_skew(const PolyMatrix& family, const Context& ctx) {
  check_pairing_input(family, ctx, /*skew=*/true);
  CompleteCollineation cc = limit_collineation(family, ctx, Flavor::skew);
  std::vector<std::string> violations;
  collect_pairing_violations(cc, &violations);
  if (!violations.empty()) throw std::logic_error("limit_skew: " + violations.front());
  return cc;
}

ValidationReport validate_collineation(const CompleteCollineation& cc) {
  ValidationReport report;
  auto fail = [&report](std::string msg) {
    report.valid = false;
    report.violations.push_back(std::move(msg));
  };
  try {
    check_context(cc.ctx);
  } catch (const std::exception& e) {
    fail(e.what());
    return report;
  }
  if (cc.flavor != Flavor::general && (cc.ctx.dim_v != cc.ctx.u || cc.ctx.dim_w != cc.ctx.u)) {
    fail("symmetric/skew flavor requires dim_v == dim_w == u");
    return report;
  }
  if (cc.domain.ambient() != cc.ctx.dim_v) {
    fail("domain ambient dimension differs from dim_v");
    return report;
  }
  if (cc.domain.dim() != cc.ctx.u) fail("domain dimension differs from u");
  if (cc.stages.empty()) {
    fail("no stages");
    return report;
  }

  RatMatrix b = cc.domain.basis();
  Subspace image = zero_subspace(cc.ctx.dim_w);
  for (size_t j = 0; j < cc.stages.size(); ++j) {
    const Stage& st = cc.stages[j];
    const std::string where = "stage " + std::to_string(j + 1) + ": ";
    if (st.map.rows() != cc.ctx.dim_w - image.dim() || st.map.cols() != b.rows()) {
      fail(where + "map shape does not match the running kernel and cokernel");
      return report;
    }
    if (st.map.is_zero()) {
      fail(where + "zero stage map");
      return report;
    }
    MapDecomposition dec = rank_kernel_cokernel(st.map);
    if (dec.rank != st.rank) fail(where + "recorded rank differs from the rank of the map");
    const Subspace ker = canonicalize(cc.ctx.dim_v, dec.kernel.basis() * b);
    if (ker != st.kernel) fail(where + "recorded kernel differs from the kernel of the map");
    if (cc.flavor == Flavor::skew && dec.rank % 2 != 0) fail(where + "odd rank in a skew collineation");
    image = grow_image(image, cokernel_model(image), st.map);
    b = ker.basis();
  }
  const int leftover = b.rows();
  if (cc.flavor == Flavor::skew) {
    if (leftover > 1)
      fail("last kernel has dimension " + std::to_string(leftover) + "; at most a null line may remain");
  } else if (leftover != 0) {
    fail("last stage map is not injective");
  }
  if (cc.flavor != Flavor::general) collect_pairing_violations(cc, &report.violations);
  report.valid = report.violations.empty();
  return report;
}

std::vector<Subspace> stage_domains(const CompleteCollineation& cc) {
  std::vector<Subspace> domains{cc.domain};
  for (size_t j = 0; j + 1 < cc.stages.size(); ++j) domains.push_back(cc.stages[j].kernel);
  return domains;
}

std::vector<Subspace> cumulative_images(const CompleteCollineation& cc) {
  std::vector<Subspace> images;
  Subspace image = zero_subspace(cc.ctx.dim_w);
  for (const Stage& st : cc.stages) {
    image = grow_image(image, cokernel_model(image), st.map);
    images.push_back(image);
  }
  return images;
}

FlagPair flags(const CompleteCollineation& cc) {
  FlagPair fp;
  fp.is_halphen = true;
  for (const Stage& st : cc.stages) {
    fp.v_flag.push_back(st.kernel);
    if (st.rank != 1) fp.is_halphen = false;
  }
  fp.w_flag = cumulative_images(cc);
  return fp;
}

CompleteCollineation halphen_degeneration(const RatMatrix& a, std::optional<Context> ctx_opt) {
  const int u = a.rows();
  if (u == 0 || a.cols() != u) throw std::invalid_argument("halphen_degeneration: matrix must be square");
  if (determinant(a) == 0) throw std::domain_error("halphen_degeneration: matrix must be invertible");
  const Context ctx = ctx_opt.value_or(Context{u, u, u});
  if (ctx.u != u || ctx.dim_w != u || ctx.dim_v < u)
    throw std::invalid_argument("halphen_degeneration: context must keep u == dim_w == matrix size");
  std::vector<std::vector<LaurentTerm>> entries;
  entries.reserve(static_cast<size_t>(u) * u);
  for (int r = 0; r < u; ++r)
    for (int c = 0; c < u; ++c) {
      std::vector<LaurentTerm> terms;
      if (a.at(r, c) != 0) terms.push_back({-(r + c + 2), a.at(r, c)});
      entries.push_back(std::move(terms));
    }
  return limit_collineation(normalize_laurent(u, u, entries).matrix, ctx, Flavor::general);
}

}  // namespace clm
