// Python extension.  Every entry point speaks the same canonical JSON as the
// command line tool: arguments are JSON strings (or plain ints where the
// value is just a number) and results come back as canonical JSON strings.
// The pure-python package wraps these in json.loads/dumps so callers work
// with dicts.  std::invalid_argument and std::domain_error surface in Python
// as ValueError.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "clm/chain.hpp"
#include "clm/forms.hpp"
#include "clm/identities.hpp"
#include "clm/json_io.hpp"
#include "clm/stability.hpp"

namespace py = pybind11;
using namespace clm;

namespace {

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("json: ") + e.what());
  }
}

std::string dump(const Json& j) { return canonical_dump(j); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact-arithmetic kernels for complete collineations (JSON string API)";

  m.def(
      "classify",
      [](const std::string& subspace, const std::string& sigma) {
        return dump(encode(classify(decode_subspace(parse(subspace)), parse_rat(sigma))));
      },
      py::arg("subspace"), py::arg("sigma"),
      "Stability of a subspace of V (+) W at linearization sigma");

  m.def(
      "weight_support",
      [](const std::string& subspace) {
        return dump(encode(plucker_weight_support(decode_subspace(parse(subspace)))));
      },
      py::arg("subspace"), "Scaling weights on the nonzero Pluecker coordinates");

  m.def(
      "dims",
      [](int dim_v, int dim_w, int u, const std::string& flavor) {
        return dump(encode(dims_report(Context{dim_v, dim_w, u}, flavor_from_name(flavor))));
      },
      py::arg("dim_v"), py::arg("dim_w"), py::arg("u"), py::arg("flavor") = "general",
      "Quotient, wall, and fixed-locus dimensions");

  m.def(
      "limit",
      [](const std::string& family, const std::string& ctx, const std::string& flavor) {
        const PolyMatrix f = decode_poly_matrix(parse(family));
        const Context c = decode_context(parse(ctx));
        switch (flavor_from_name(flavor)) {
          case Flavor::symmetric:
            return dump(encode(limit_quadric(f, c)));
          case Flavor::skew:
            return dump(encode(limit_skew(f, c)));
          default:
            return dump(encode(limit_collineation(f, c)));
        }
      },
      py::arg("family"), py::arg("ctx"), py::arg("flavor") = "general",
      "Limit at t = 0 of a one-parameter family of maps");

  m.def(
      "halphen",
      [](const std::string& a, const std::optional<std::string>& ctx) {
        std::optional<Context> c;
        if (ctx) c = decode_context(parse(*ctx));
        return dump(encode(halphen_degeneration(decode_matrix(parse(a)), c)));
      },
      py::arg("a"), py::arg("ctx") = std::nullopt,
      "Torus degeneration of an invertible matrix into a rank-1 staircase");

  m.def(
      "validate_collineation",
      [](const std::string& cc) {
        return dump(encode(validate_collineation(decode_collineation(parse(cc)))));
      },
      py::arg("collineation"), "Check the stage structure of a complete collineation");

  m.def(
      "flags",
      [](const std::string& cc) {
        return dump(encode(flags(decode_collineation(parse(cc)))));
      },
      py::arg("collineation"), "Kernel and image flags accumulated by the stages");

  m.def(
      "chain_from_collineation",
      [](const std::string& cc) {
        return dump(encode(chain_from_collineation(decode_collineation(parse(cc)))));
      },
      py::arg("collineation"), "Boundary cycle of a complete collineation");

  m.def(
      "collineation_from_chain",
      [](const std::string& chain) {
        return dump(encode(collineation_from_chain(decode_chain(parse(chain)))));
      },
      py::arg("chain"), "Complete collineation encoded by a valid nodal chain");

  m.def(
      "validate_chain",
      [](const std::string& chain) {
        return dump(encode(validate_chain(decode_chain(parse(chain)))));
      },
      py::arg("chain"), "Nodal equations, adjacency, and degree of a chain");

  m.def(
      "sink_source",
      [](const std::string& subspace) {
        return dump(encode(sink_source(decode_subspace(parse(subspace)))));
      },
      py::arg("subspace"), "Limits of a subspace under the scaling action");

  m.def(
      "isotropy",
      [](const std::string& subspace, const std::string& kind) {
        return dump(
            encode(isotropy_check(decode_subspace(parse(subspace)), pairing_from_name(kind))));
      },
      py::arg("subspace"), py::arg("kind"),
      "Isotropy of a subspace for the symplectic or symmetric pairing");

  m.def(
      "section_dim_identity",
      [](int u, int k) { return dump(encode(section_dim_identity(u, k))); }, py::arg("u"),
      py::arg("k"), "Binomial section-count identity, both sides evaluated");

  m.def(
      "snake_oil",
      [](int j, int order) { return dump(encode(snake_oil_check(j, order))); }, py::arg("j"),
      py::arg("order") = 30, "Column generating function against its closed form");

  m.def(
      "section_series",
      [](int k, int order) { return dump(encode(section_series_check(k, order))); },
      py::arg("k"), py::arg("order") = 30,
      "Section counts as coefficients of (1 - x)^(-1-2k), three routes");
}
