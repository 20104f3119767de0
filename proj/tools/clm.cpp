#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "clm/json_io.hpp"

using namespace clm;

namespace {

// ---- input plumbing -----------------------------------------------------

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json read_json(const std::string& path) { return Json::parse(slurp(path)); }

// ---- text renderers -----------------------------------------------------

std::string matrix_text(const RatMatrix& m) {
  std::string out = "[";
  for (int r = 0; r < m.rows(); ++r) {
    out += r ? "; " : "";
    for (int c = 0; c < m.cols(); ++c) out += (c ? " " : "") + rat_str(m.at(r, c));
  }
  return out + "]";
}

std::string poly_text(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rat c = p.coeff(k);
    if (c == 0) continue;
    const Rat mag = c < 0 ? Rat(-c) : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    const bool unit = mag == 1 && k > 0;
    if (!unit) out += rat_str(mag);
    if (k > 0) {
      if (!unit) out += "*";
      out += "t";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::string poly_matrix_text(const PolyMatrix& m) {
  std::string out = "[";
  for (int r = 0; r < m.rows(); ++r) {
    out += r ? "; " : "";
    for (int c = 0; c < m.cols(); ++c) out += (c ? ", " : "") + poly_text(m.at(r, c));
  }
  return out + "]";
}

std::string subspace_text(const Subspace& u) {
  std::string out = "dim " + std::to_string(u.dim()) + " in Q^" + std::to_string(u.ambient());
  if (u.split())
    out += " = Q^" + std::to_string(u.split()->dim_v) + " (+) Q^" +
           std::to_string(u.split()->dim_w);
  return out + ", basis " + matrix_text(u.basis());
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string collineation_text(const CompleteCollineation& cc) {
  std::ostringstream out;
  out << "flavor: " << flavor_name(cc.flavor) << "\n";
  out << "context: dim_v=" << cc.ctx.dim_v << " dim_w=" << cc.ctx.dim_w << " u=" << cc.ctx.u
      << "\n";
  out << "domain: " << subspace_text(cc.domain) << "\n";
  for (size_t j = 0; j < cc.stages.size(); ++j) {
    const Stage& st = cc.stages[j];
    out << "stage " << j + 1 << ": rank " << st.rank << ", map " << matrix_text(st.map)
        << ", kernel " << subspace_text(st.kernel) << "\n";
  }
  return out.str();
}

std::string chain_text(const NodalChain& chain) {
  std::ostringstream out;
  out << "context: dim_v=" << chain.ctx.dim_v << " dim_w=" << chain.ctx.dim_w
      << " u=" << chain.ctx.u << "\n";
  for (size_t j = 0; j < chain.components.size(); ++j)
    out << "component " << j + 1 << ": " << subspace_text(chain.components[j]) << "\n";
  return out.str();
}

std::string stability_text(const StabilityReport& r) {
  std::ostringstream out;
  out << "sigma: " << rat_str(r.sigma) << "\n";
  out << "status: " << stability_name(r.status) << "\n";
  out << "dim(U cap V): " << r.dim_u_cap_v << "\n";
  out << "dim(U cap W): " << r.dim_u_cap_w << "\n";
  out << "semistable sigma interval: [" << r.interval_lo << ", " << r.interval_hi << "]\n";
  if (r.graded) {
    out << "graded V-part: " << subspace_text(r.graded->v_part) << "\n";
    out << "graded W-part: " << subspace_text(r.graded->w_part) << "\n";
  }
  return out.str();
}

std::string weights_text(const WeightSupport& s) {
  std::ostringstream out;
  out << "weights:";
  for (int w : s.weights) out << " " << w;
  out << "\norbit degree: " << s.orbit_degree << "\n";
  return out.str();
}

std::string dims_text(const DimReport& r) {
  std::ostringstream out;
  out << "context: dim_v=" << r.ctx.dim_v << " dim_w=" << r.ctx.dim_w << " u=" << r.ctx.u
      << " flavor=" << flavor_name(r.flavor) << "\n";
  out << "quotient dimension: " << r.dim_quotient << "\n";
  out << "walls:";
  for (int w : r.walls) out << " " << w;
  out << "\nend chambers: over Gr(V) " << r.dim_end_v << ", over Gr(W) " << r.dim_end_w << "\n";
  if (!r.loci.empty()) {
    out << "k | Z0 | Z- | Z+ | secant\n";
    for (const WallLocus& l : r.loci)
      out << l.k << " | " << l.dim_z0 << " | " << l.dim_z_minus << " | " << l.dim_z_plus
          << " | " << l.dim_secant << "\n";
  }
  return out.str();
}

std::string chain_report_text(const ChainReport& r) {
  std::ostringstream out;
  out << "valid: " << yes_no(r.valid) << "\n";
  out << "violated equations:";
  if (r.violated_equations.empty()) out << " none";
  for (int eq : r.violated_equations) out << " " << eq;
  out << "\nadjacent: " << yes_no(r.adjacent) << "\n";
  if (r.total_degree >= 0)
    out << "total degree: " << r.total_degree << " (matches u: " << yes_no(r.degree_matches)
        << ")\n";
  else
    out << "total degree: not computed (size limits)\n";
  out << "shape:";
  for (const auto& [left, right] : r.shape.components)
    out << " (" << left << "," << right << ")";
  out << "\n";
  for (const std::string& v : r.violations) out << "violation: " << v << "\n";
  return out.str();
}

std::string isotropy_text(const IsotropyReport& r) {
  std::ostringstream out;
  out << "isotropic: " << yes_no(r.isotropic) << "\n";
  out << "maximal: " << yes_no(r.maximal) << "\n";
  out << "dim(U cap V): " << r.dim_u_cap_v << " ("
      << (r.v_intersection_parity == Parity::even ? "even" : "odd") << ")\n";
  if (r.plus_component)
    out << "component of V in OGr: " << yes_no(*r.plus_component) << "\n";
  return out.str();
}

std::string identity_text(const IdentityResult& r) {
  std::ostringstream out;
  out << "lhs: " << r.lhs.get_str() << "\nrhs: " << r.rhs.get_str()
      << "\nequal: " << yes_no(r.equal) << "\n";
  return out.str();
}

std::string series_text(const std::vector<Int>& coeffs) {
  std::string out;
  for (const Int& c : coeffs) out += (out.empty() ? "" : " ") + c.get_str();
  return out;
}

// ---- output plumbing ----------------------------------------------------

struct Io {
  std::string input = "-";
  std::string format = "json";
};

void add_io(CLI::App* sub, Io& io, bool with_input = true) {
  if (with_input)
    sub->add_option("input", io.input, "input file, or - for standard input")
        ->capture_default_str();
  sub->add_option("--format", io.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
}

void emit(const Io& io, const Json& j, const std::function<std::string()>& text) {
  if (io.format == "text")
    std::cout << text();
  else
    std::cout << canonical_dump(j) << "\n";
}

[[noreturn]] void reject(const char* kind, const Json& report) {
  Json error{{"error", kind}, {"report", report}};
  throw std::domain_error(canonical_dump(error));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with complete collineations, quadrics, and skew forms"};
  app.require_subcommand(1);
  std::function<void()> run;

  // classify ---------------------------------------------------------------
  auto* classify_cmd = app.add_subcommand(
      "classify", "stability of a subspace of V (+) W at a linearization sigma");
  static Io classify_io;
  static std::string sigma_text = "0";
  static int sweep = 0;
  static unsigned long long seed = 0;
  classify_cmd->add_option("--sigma", sigma_text, "linearization parameter, rational");
  classify_cmd->add_option("--sweep", sweep,
                           "check the weight oracle on this many random subspaces instead");
  classify_cmd->add_option("--seed", seed, "seed for --sweep")->capture_default_str();
  add_io(classify_cmd, classify_io);
  classify_cmd->callback([&] {
    run = [] {
      if (sweep > 0) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> dim_pick(1, 4);
        std::uniform_int_distribution<int> span(-4, 4);
        std::uniform_int_distribution<int> quarters(-4, 4 * 4 + 4);
        for (int i = 0; i < sweep; ++i) {
          const int dim_v = dim_pick(rng), dim_w = dim_pick(rng);
          const int u = 1 + i % std::min(3, dim_v + dim_w);
          RatMatrix rows(u, dim_v + dim_w);
          for (int r = 0; r < u; ++r)
            for (int c = 0; c < dim_v + dim_w; ++c) rows.at(r, c) = span(rng);
          const Subspace u_space =
              canonicalize(dim_v + dim_w, rows, Split{dim_v, dim_w});
          if (u_space.dim() == 0) continue;
          const Rat sigma = Rat(quarters(rng)) / 4;
          if (!semistable_oracle_equivalence(u_space, sigma))
            throw std::logic_error("weight oracle disagreement at sample " +
                                   std::to_string(i));
        }
        emit(classify_io, Json{{"samples", sweep}, {"all_agree", true}},
             [] { return "all " + std::to_string(sweep) + " samples agree\n"; });
        return;
      }
      const Subspace u_space = decode_subspace(read_json(classify_io.input));
      const StabilityReport report = classify(u_space, parse_rat(sigma_text));
      emit(classify_io, encode(report), [&] { return stability_text(report); });
    };
  });

  // weights ----------------------------------------------------------------
  auto* weights_cmd =
      app.add_subcommand("weights", "torus weight support and orbit degree of a subspace");
  static Io weights_io;
  add_io(weights_cmd, weights_io);
  weights_cmd->callback([&] {
    run = [] {
      const Subspace u_space = decode_subspace(read_json(weights_io.input));
      const WeightSupport support = plucker_weight_support(u_space);
      emit(weights_io, encode(support), [&] { return weights_text(support); });
    };
  });

  // dims -------------------------------------------------------------------
  auto* dims_cmd = app.add_subcommand("dims", "dimension bookkeeping for a context");
  static Io dims_io;
  static Context dims_ctx;
  static std::string dims_flavor = "general";
  dims_cmd->add_option("--dim-v", dims_ctx.dim_v, "dimension of V")->required();
  dims_cmd->add_option("--dim-w", dims_ctx.dim_w, "dimension of W")->required();
  dims_cmd->add_option("--u", dims_ctx.u, "rank of the collineations")->required();
  dims_cmd->add_option("--flavor", dims_flavor, "general, symmetric, or skew")
      ->capture_default_str();
  add_io(dims_cmd, dims_io, /*with_input=*/false);
  dims_cmd->callback([&] {
    run = [] {
      const DimReport report = dims_report(dims_ctx, flavor_from_name(dims_flavor));
      emit(dims_io, encode(report), [&] { return dims_text(report); });
    };
  });

  // collineate / quadric / skew ---------------------------------------------
  static Io limit_io;
  const auto limit_runner = [](Flavor flavor) {
    return [flavor] {
      const Json input = read_json(limit_io.input);
      const PolyMatrix family = decode_poly_matrix(input.contains("family")
                                                       ? input.at("family")
                                                       : input);
      Context ctx{family.cols(), family.rows(), family.cols()};
      if (input.is_object() && input.contains("ctx")) ctx = decode_context(input.at("ctx"));
      CompleteCollineation cc;
      switch (flavor) {
        case Flavor::general: cc = limit_collineation(family, ctx); break;
        case Flavor::symmetric: cc = limit_quadric(family, ctx); break;
        case Flavor::skew: cc = limit_skew(family, ctx); break;
      }
      emit(limit_io, encode(cc), [&] { return collineation_text(cc); });
    };
  };
  auto* collineate_cmd = app.add_subcommand(
      "collineate", "limit collineation of a polynomial family (input: {family, ctx})");
  add_io(collineate_cmd, limit_io);
  collineate_cmd->callback([&, limit_runner] { run = limit_runner(Flavor::general); });
  auto* quadric_cmd = app.add_subcommand(
      "quadric", "limit of a symmetric family on V (+) V* (input: {family, ctx})");
  add_io(quadric_cmd, limit_io);
  quadric_cmd->callback([&, limit_runner] { run = limit_runner(Flavor::symmetric); });
  auto* skew_cmd = app.add_subcommand(
      "skew", "limit of an antisymmetric family on V (+) V* (input: {family, ctx})");
  add_io(skew_cmd, limit_io);
  skew_cmd->callback([&, limit_runner] { run = limit_runner(Flavor::skew); });

  // chain-validate -----------------------------------------------------------
  auto* chain_validate_cmd =
      app.add_subcommand("chain-validate", "check the five nodal equations on a chain");
  static Io chain_validate_io;
  add_io(chain_validate_cmd, chain_validate_io);
  chain_validate_cmd->callback([&] {
    run = [] {
      const NodalChain chain = decode_chain(read_json(chain_validate_io.input));
      const ChainReport report = validate_chain(chain);
      emit(chain_validate_io, encode(report), [&] { return chain_report_text(report); });
    };
  });

  // chain-from-cc -------------------------------------------------------------
  auto* chain_from_cc_cmd =
      app.add_subcommand("chain-from-cc", "nodal chain attached to a complete collineation");
  static Io chain_from_cc_io;
  add_io(chain_from_cc_cmd, chain_from_cc_io);
  chain_from_cc_cmd->callback([&] {
    run = [] {
      const CompleteCollineation cc = decode_collineation(read_json(chain_from_cc_io.input));
      const ValidationReport validation = validate_collineation(cc);
      if (!validation.valid) reject("invalid-collineation", encode(validation));
      const NodalChain chain = chain_from_collineation(cc);
      emit(chain_from_cc_io, encode(chain), [&] { return chain_text(chain); });
    };
  });

  // cc-from-chain -------------------------------------------------------------
  auto* cc_from_chain_cmd =
      app.add_subcommand("cc-from-chain", "complete collineation read off a nodal chain");
  static Io cc_from_chain_io;
  add_io(cc_from_chain_cmd, cc_from_chain_io);
  cc_from_chain_cmd->callback([&] {
    run = [] {
      const NodalChain chain = decode_chain(read_json(cc_from_chain_io.input));
      const ChainReport report = validate_chain(chain);
      if (!report.valid) reject("invalid-chain", encode(report));
      const CompleteCollineation cc = collineation_from_chain(chain);
      emit(cc_from_chain_io, encode(cc), [&] { return collineation_text(cc); });
    };
  });

  // halphen --------------------------------------------------------------------
  auto* halphen_cmd = app.add_subcommand(
      "halphen", "weighted torus degeneration of an invertible matrix (input: {a, ctx?})");
  static Io halphen_io;
  add_io(halphen_cmd, halphen_io);
  halphen_cmd->callback([&] {
    run = [] {
      const Json input = read_json(halphen_io.input);
      const RatMatrix a = decode_matrix(input.contains("a") ? input.at("a") : input);
      std::optional<Context> ctx;
      if (input.is_object() && input.contains("ctx") && !input.at("ctx").is_null())
        ctx = decode_context(input.at("ctx"));
      const CompleteCollineation cc = halphen_degeneration(a, ctx);
      emit(halphen_io, encode(cc), [&] { return collineation_text(cc); });
    };
  });

  // isotropy ---------------------------------------------------------------------
  auto* isotropy_cmd =
      app.add_subcommand("isotropy", "pairing isotropy of a subspace of V (+) V*");
  static Io isotropy_io;
  static std::string kind_name = "symplectic";
  isotropy_cmd->add_option("--kind", kind_name, "symplectic or symmetric")
      ->check(CLI::IsMember({"symplectic", "symmetric"}))
      ->capture_default_str();
  add_io(isotropy_cmd, isotropy_io);
  isotropy_cmd->callback([&] {
    run = [] {
      const Subspace u_space = decode_subspace(read_json(isotropy_io.input));
      const IsotropyReport report = isotropy_check(u_space, pairing_from_name(kind_name));
      emit(isotropy_io, encode(report), [&] { return isotropy_text(report); });
    };
  });

  // identity ------------------------------------------------------------------------
  auto* identity_cmd =
      app.add_subcommand("identity", "section-count identity, single evaluation or sweep");
  static Io identity_io;
  static int id_u = 0, id_k = 0, max_u = 0, max_k = 0;
  identity_cmd->add_option("--u", id_u, "number of stages");
  identity_cmd->add_option("--k", id_k, "twist parameter");
  identity_cmd->add_option("--max-u", max_u, "sweep u = 1..max-u");
  identity_cmd->add_option("--max-k", max_k, "sweep k = 1..max-k");
  add_io(identity_cmd, identity_io, /*with_input=*/false);
  identity_cmd->callback([&] {
    run = [] {
      if (max_u > 0 || max_k > 0) {
        if (max_u <= 0 || max_k <= 0)
          throw std::invalid_argument("sweep needs both --max-u and --max-k");
        Json rows = Json::array();
        std::ostringstream csv;
        csv << "u,k,lhs,rhs,equal\n";
        for (int u = 1; u <= max_u; ++u)
          for (int k = 1; k <= max_k; ++k) {
            const IdentityResult r = section_dim_identity(u, k);
            Json row = encode(r);
            row["u"] = u;
            row["k"] = k;
            rows.push_back(std::move(row));
            csv << u << "," << k << "," << r.lhs.get_str() << "," << r.rhs.get_str() << ","
                << (r.equal ? "true" : "false") << "\n";
          }
        emit(identity_io, rows, [&] { return csv.str(); });
        return;
      }
      if (id_u <= 0 || id_k <= 0)
        throw std::invalid_argument("need --u and --k (or --max-u with --max-k)");
      const IdentityResult result = section_dim_identity(id_u, id_k);
      emit(identity_io, encode(result), [&] { return identity_text(result); });
    };
  });

  // snake-oil ---------------------------------------------------------------------------
  auto* snake_cmd = app.add_subcommand(
      "snake-oil", "generating-function checks behind the section-count identity");
  static Io snake_io;
  static int snake_j = -1, snake_k = 0, snake_order = 30;
  snake_cmd->add_option("--j", snake_j, "check sum_r C(r,j) x^r = x^j/(1-x)^(j+1)");
  snake_cmd->add_option("--k", snake_k,
                        "check both identity sides generate (1-x)^(-1-2k)");
  snake_cmd->add_option("--order", snake_order, "truncation order")->capture_default_str();
  add_io(snake_cmd, snake_io, /*with_input=*/false);
  snake_cmd->callback([&] {
    run = [] {
      if ((snake_j >= 0) == (snake_k > 0))
        throw std::invalid_argument("need exactly one of --j and --k");
      if (snake_j >= 0) {
        const SeriesCheck check = snake_oil_check(snake_j, snake_order);
        emit(snake_io, encode(check), [&] {
          return "lhs: " + series_text(check.lhs) + "\nrhs: " + series_text(check.rhs) +
                 "\nequal: " + yes_no(check.equal) + "\n";
        });
      } else {
        const SectionSeriesCheck check = section_series_check(snake_k, snake_order);
        emit(snake_io, encode(check), [&] {
          return "summation:   " + series_text(check.summation) +
                 "\nclosed form: " + series_text(check.closed_form) +
                 "\nexpansion:   " + series_text(check.expansion) +
                 "\nequal: " + yes_no(check.equal) + "\n";
        });
      }
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    run();
  } catch (const Json::parse_error& e) {
    std::cerr << canonical_dump(Json{{"error", "parse"}, {"detail", e.what()}}) << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    // reject() passes through a prebuilt error object; everything else is
    // wrapped.
    const std::string what = e.what();
    if (!what.empty() && what.front() == '{')
      std::cerr << what << "\n";
    else
      std::cerr << canonical_dump(Json{{"error", "domain"}, {"detail", what}}) << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << canonical_dump(Json{{"error", "invalid"}, {"detail", e.what()}}) << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << canonical_dump(Json{{"error", "logic"}, {"detail", e.what()}}) << "\n";
    return 1;
  }
  return 0;
}
