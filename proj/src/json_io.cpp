#include "clm/json_io.hpp"

#include <stdexcept>
#include <utility>

namespace clm {
namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument("json: " + what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object with \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field \"") + key + "\"");
  return *it;
}

int expect_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

long expect_long(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<long>();
}

bool expect_bool(const Json& j, const char* what) {
  if (!j.is_boolean()) fail(std::string(what) + " must be a boolean");
  return j.get<bool>();
}

std::string expect_string(const Json& j, const char* what) {
  if (!j.is_string()) fail(std::string(what) + " must be a string");
  return j.get<std::string>();
}

const Json& expect_array(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  return j;
}

std::vector<int> decode_int_vector(const Json& j, const char* what) {
  std::vector<int> out;
  for (const Json& item : expect_array(j, what)) out.push_back(expect_int(item, what));
  return out;
}

std::vector<Int> decode_big_vector(const Json& j, const char* what) {
  std::vector<Int> out;
  for (const Json& item : expect_array(j, what)) out.push_back(decode_int(item));
  return out;
}

Json encode_big_vector(const std::vector<Int>& values) {
  Json out = Json::array();
  for (const Int& v : values) out.push_back(encode(v));
  return out;
}

}  // namespace

std::string canonical_dump(const Json& j) { return j.dump(); }

Json encode(const Rat& q) { return rat_str(q); }

Json encode(const Int& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

Json encode(const RatMatrix& m) {
  Json entries = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(encode(m.at(r, c)));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Json encode(const Poly& p) {
  Json coeffs = Json::array();
  for (const Rat& c : p.coeffs()) coeffs.push_back(encode(c));
  return coeffs;
}

Json encode(const PolyMatrix& m) {
  Json entries = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(encode(m.at(r, c)));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Json encode(const Split& s) { return Json{{"dim_v", s.dim_v}, {"dim_w", s.dim_w}}; }

Json encode(const Subspace& u) {
  Json out{{"ambient", u.ambient()}, {"basis", encode(u.basis())}};
  out["split"] = u.split() ? encode(*u.split()) : Json(nullptr);
  return out;
}

Json encode(const Context& ctx) {
  return Json{{"dim_v", ctx.dim_v}, {"dim_w", ctx.dim_w}, {"u", ctx.u}};
}

Json encode(const Stage& stage) {
  return Json{{"map", encode(stage.map)}, {"kernel", encode(stage.kernel)}, {"rank", stage.rank}};
}

Json encode(const CompleteCollineation& cc) {
  Json stages = Json::array();
  for (const Stage& stage : cc.stages) stages.push_back(encode(stage));
  return Json{{"ctx", encode(cc.ctx)},
              {"flavor", flavor_name(cc.flavor)},
              {"domain", encode(cc.domain)},
              {"stages", std::move(stages)}};
}

Json encode(const ValidationReport& report) {
  return Json{{"valid", report.valid}, {"violations", report.violations}};
}

Json encode(const FlagPair& flags) {
  Json v = Json::array();
  for (const Subspace& s : flags.v_flag) v.push_back(encode(s));
  Json w = Json::array();
  for (const Subspace& s : flags.w_flag) w.push_back(encode(s));
  return Json{{"v_flag", std::move(v)}, {"w_flag", std::move(w)}, {"is_halphen", flags.is_halphen}};
}

Json encode(const NodalChain& chain) {
  Json components = Json::array();
  for (const Subspace& c : chain.components) components.push_back(encode(c));
  return Json{{"ctx", encode(chain.ctx)}, {"components", std::move(components)}};
}

Json encode(const SinkSource& ss) {
  return Json{{"sink", encode(ss.sink)}, {"source", encode(ss.source)}};
}

Json encode(const GraphCycleShape& shape) {
  Json out = Json::array();
  for (const auto& [left, right] : shape.components) out.push_back(Json::array({left, right}));
  return out;
}

Json encode(const ChainReport& report) {
  return Json{{"valid", report.valid},
              {"violated_equations", report.violated_equations},
              {"violations", report.violations},
              {"adjacent", report.adjacent},
              {"total_degree", report.total_degree},
              {"degree_matches", report.degree_matches},
              {"shape", encode(report.shape)}};
}

Json encode(const GradedObject& graded) {
  return Json{{"v_part", encode(graded.v_part)}, {"w_part", encode(graded.w_part)}};
}

Json encode(const StabilityReport& report) {
  Json out{{"sigma", encode(report.sigma)},
           {"status", stability_name(report.status)},
           {"dim_u_cap_v", report.dim_u_cap_v},
           {"dim_u_cap_w", report.dim_u_cap_w},
           {"interval_lo", report.interval_lo},
           {"interval_hi", report.interval_hi}};
  out["graded"] = report.graded ? encode(*report.graded) : Json(nullptr);
  return out;
}

Json encode(const WeightSupport& support) {
  return Json{{"weights", support.weights}, {"orbit_degree", support.orbit_degree}};
}

Json encode(const WallLocus& locus) {
  return Json{{"k", locus.k},
              {"dim_z0", locus.dim_z0},
              {"dim_z_minus", locus.dim_z_minus},
              {"dim_z_plus", locus.dim_z_plus},
              {"dim_secant", locus.dim_secant}};
}

Json encode(const DimReport& report) {
  Json loci = Json::array();
  for (const WallLocus& locus : report.loci) loci.push_back(encode(locus));
  return Json{{"ctx", encode(report.ctx)},
              {"flavor", flavor_name(report.flavor)},
              {"dim_quotient", report.dim_quotient},
              {"walls", report.walls},
              {"loci", std::move(loci)},
              {"dim_end_v", report.dim_end_v},
              {"dim_end_w", report.dim_end_w}};
}

Json encode(const IsotropyReport& report) {
  Json out{{"isotropic", report.isotropic},
           {"maximal", report.maximal},
           {"dim_u_cap_v", report.dim_u_cap_v},
           {"v_intersection_parity",
            report.v_intersection_parity == Parity::even ? "even" : "odd"}};
  out["plus_component"] = report.plus_component ? Json(*report.plus_component) : Json(nullptr);
  return out;
}

Json encode(const IdentityResult& result) {
  return Json{{"lhs", encode(result.lhs)}, {"rhs", encode(result.rhs)}, {"equal", result.equal}};
}

Json encode(const SeriesCheck& check) {
  return Json{{"lhs", encode_big_vector(check.lhs)},
              {"rhs", encode_big_vector(check.rhs)},
              {"equal", check.equal}};
}

Json encode(const SectionSeriesCheck& check) {
  return Json{{"summation", encode_big_vector(check.summation)},
              {"closed_form", encode_big_vector(check.closed_form)},
              {"expansion", encode_big_vector(check.expansion)},
              {"equal", check.equal}};
}

Rat decode_rat(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  fail("a rational must be a string \"p/q\" or an integer");
}

Int decode_int(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      fail("malformed integer string");
    }
  }
  fail("an integer must be a number or a decimal string");
}

RatMatrix decode_matrix(const Json& j) {
  const int rows = expect_int(field(j, "rows"), "rows");
  const int cols = expect_int(field(j, "cols"), "cols");
  if (rows < 0 || cols < 0) fail("matrix dimensions must be nonnegative");
  const Json& entries = expect_array(field(j, "entries"), "entries");
  if (static_cast<int>(entries.size()) != rows) fail("entry rows disagree with \"rows\"");
  RatMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const Json& row = expect_array(entries[r], "matrix row");
    if (static_cast<int>(row.size()) != cols) fail("entry columns disagree with \"cols\"");
    for (int c = 0; c < cols; ++c) m.at(r, c) = decode_rat(row[c]);
  }
  return m;
}

Poly decode_poly(const Json& j) {
  std::vector<Rat> coeffs;
  for (const Json& c : expect_array(j, "polynomial")) coeffs.push_back(decode_rat(c));
  return Poly(std::move(coeffs));
}

PolyMatrix decode_poly_matrix(const Json& j) {
  const int rows = expect_int(field(j, "rows"), "rows");
  const int cols = expect_int(field(j, "cols"), "cols");
  if (rows < 0 || cols < 0) fail("matrix dimensions must be nonnegative");
  const Json& entries = expect_array(field(j, "entries"), "entries");
  if (static_cast<int>(entries.size()) != rows) fail("entry rows disagree with \"rows\"");
  PolyMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const Json& row = expect_array(entries[r], "matrix row");
    if (static_cast<int>(row.size()) != cols) fail("entry columns disagree with \"cols\"");
    for (int c = 0; c < cols; ++c) m.at(r, c) = decode_poly(row[c]);
  }
  return m;
}

Split decode_split(const Json& j) {
  return Split{expect_int(field(j, "dim_v"), "dim_v"), expect_int(field(j, "dim_w"), "dim_w")};
}

Subspace decode_subspace(const Json& j) {
  const int ambient = expect_int(field(j, "ambient"), "ambient");
  const RatMatrix basis = decode_matrix(field(j, "basis"));
  if (basis.cols() != ambient) fail("basis width disagrees with the ambient dimension");
  std::optional<Split> split;
  const Json& s = field(j, "split");
  if (!s.is_null()) split = decode_split(s);
  if (split && split->dim_v + split->dim_w != ambient)
    fail("split does not add up to the ambient dimension");
  return canonicalize(ambient, basis, split);
}

Context decode_context(const Json& j) {
  return Context{expect_int(field(j, "dim_v"), "dim_v"),
                 expect_int(field(j, "dim_w"), "dim_w"), expect_int(field(j, "u"), "u")};
}

Stage decode_stage(const Json& j) {
  Stage stage;
  stage.map = decode_matrix(field(j, "map"));
  stage.kernel = decode_subspace(field(j, "kernel"));
  stage.rank = expect_int(field(j, "rank"), "rank");
  return stage;
}

CompleteCollineation decode_collineation(const Json& j) {
  CompleteCollineation cc;
  cc.ctx = decode_context(field(j, "ctx"));
  cc.flavor = flavor_from_name(expect_string(field(j, "flavor"), "flavor"));
  cc.domain = decode_subspace(field(j, "domain"));
  for (const Json& stage : expect_array(field(j, "stages"), "stages"))
    cc.stages.push_back(decode_stage(stage));
  return cc;
}

ValidationReport decode_validation_report(const Json& j) {
  ValidationReport report;
  report.valid = expect_bool(field(j, "valid"), "valid");
  for (const Json& v : expect_array(field(j, "violations"), "violations"))
    report.violations.push_back(expect_string(v, "violation"));
  return report;
}

FlagPair decode_flag_pair(const Json& j) {
  FlagPair flags;
  for (const Json& s : expect_array(field(j, "v_flag"), "v_flag"))
    flags.v_flag.push_back(decode_subspace(s));
  for (const Json& s : expect_array(field(j, "w_flag"), "w_flag"))
    flags.w_flag.push_back(decode_subspace(s));
  flags.is_halphen = expect_bool(field(j, "is_halphen"), "is_halphen");
  return flags;
}

NodalChain decode_chain(const Json& j) {
  NodalChain chain;
  chain.ctx = decode_context(field(j, "ctx"));
  for (const Json& c : expect_array(field(j, "components"), "components"))
    chain.components.push_back(decode_subspace(c));
  return chain;
}

SinkSource decode_sink_source(const Json& j) {
  SinkSource ss;
  ss.sink = decode_subspace(field(j, "sink"));
  ss.source = decode_subspace(field(j, "source"));
  return ss;
}

GraphCycleShape decode_shape(const Json& j) {
  GraphCycleShape shape;
  for (const Json& pair : expect_array(j, "shape")) {
    const Json& arr = expect_array(pair, "shape entry");
    if (arr.size() != 2) fail("shape entries are [left, right] pairs");
    shape.components.emplace_back(expect_int(arr[0], "shape entry"),
                                  expect_int(arr[1], "shape entry"));
  }
  return shape;
}

ChainReport decode_chain_report(const Json& j) {
  ChainReport report;
  report.valid = expect_bool(field(j, "valid"), "valid");
  report.violated_equations = decode_int_vector(field(j, "violated_equations"), "violated_equations");
  for (const Json& v : expect_array(field(j, "violations"), "violations"))
    report.violations.push_back(expect_string(v, "violation"));
  report.adjacent = expect_bool(field(j, "adjacent"), "adjacent");
  report.total_degree = expect_int(field(j, "total_degree"), "total_degree");
  report.degree_matches = expect_bool(field(j, "degree_matches"), "degree_matches");
  report.shape = decode_shape(field(j, "shape"));
  return report;
}

GradedObject decode_graded_object(const Json& j) {
  GradedObject graded;
  graded.v_part = decode_subspace(field(j, "v_part"));
  graded.w_part = decode_subspace(field(j, "w_part"));
  return graded;
}

StabilityReport decode_stability_report(const Json& j) {
  StabilityReport report;
  report.sigma = decode_rat(field(j, "sigma"));
  report.status = stability_from_name(expect_string(field(j, "status"), "status"));
  report.dim_u_cap_v = expect_int(field(j, "dim_u_cap_v"), "dim_u_cap_v");
  report.dim_u_cap_w = expect_int(field(j, "dim_u_cap_w"), "dim_u_cap_w");
  report.interval_lo = expect_int(field(j, "interval_lo"), "interval_lo");
  report.interval_hi = expect_int(field(j, "interval_hi"), "interval_hi");
  const Json& graded = field(j, "graded");
  if (!graded.is_null()) report.graded = decode_graded_object(graded);
  return report;
}

WeightSupport decode_weight_support(const Json& j) {
  WeightSupport support;
  support.weights = decode_int_vector(field(j, "weights"), "weights");
  support.orbit_degree = expect_int(field(j, "orbit_degree"), "orbit_degree");
  return support;
}

WallLocus decode_wall_locus(const Json& j) {
  WallLocus locus;
  locus.k = expect_int(field(j, "k"), "k");
  locus.dim_z0 = expect_long(field(j, "dim_z0"), "dim_z0");
  locus.dim_z_minus = expect_long(field(j, "dim_z_minus"), "dim_z_minus");
  locus.dim_z_plus = expect_long(field(j, "dim_z_plus"), "dim_z_plus");
  locus.dim_secant = expect_long(field(j, "dim_secant"), "dim_secant");
  return locus;
}

DimReport decode_dim_report(const Json& j) {
  DimReport report;
  report.ctx = decode_context(field(j, "ctx"));
  report.flavor = flavor_from_name(expect_string(field(j, "flavor"), "flavor"));
  report.dim_quotient = expect_long(field(j, "dim_quotient"), "dim_quotient");
  report.walls = decode_int_vector(field(j, "walls"), "walls");
  for (const Json& locus : expect_array(field(j, "loci"), "loci"))
    report.loci.push_back(decode_wall_locus(locus));
  report.dim_end_v = expect_long(field(j, "dim_end_v"), "dim_end_v");
  report.dim_end_w = expect_long(field(j, "dim_end_w"), "dim_end_w");
  return report;
}

IsotropyReport decode_isotropy_report(const Json& j) {
  IsotropyReport report;
  report.isotropic = expect_bool(field(j, "isotropic"), "isotropic");
  report.maximal = expect_bool(field(j, "maximal"), "maximal");
  report.dim_u_cap_v = expect_int(field(j, "dim_u_cap_v"), "dim_u_cap_v");
  const std::string parity =
      expect_string(field(j, "v_intersection_parity"), "v_intersection_parity");
  if (parity != "even" && parity != "odd") fail("parity must be \"even\" or \"odd\"");
  report.v_intersection_parity = parity == "even" ? Parity::even : Parity::odd;
  const Json& plus = field(j, "plus_component");
  if (!plus.is_null()) report.plus_component = expect_bool(plus, "plus_component");
  return report;
}

IdentityResult decode_identity_result(const Json& j) {
  IdentityResult result;
  result.lhs = decode_int(field(j, "lhs"));
  result.rhs = decode_int(field(j, "rhs"));
  result.equal = expect_bool(field(j, "equal"), "equal");
  return result;
}

SeriesCheck decode_series_check(const Json& j) {
  SeriesCheck check;
  check.lhs = decode_big_vector(field(j, "lhs"), "lhs");
  check.rhs = decode_big_vector(field(j, "rhs"), "rhs");
  check.equal = expect_bool(field(j, "equal"), "equal");
  return check;
}

SectionSeriesCheck decode_section_series_check(const Json& j) {
  SectionSeriesCheck check;
  check.summation = decode_big_vector(field(j, "summation"), "summation");
  check.closed_form = decode_big_vector(field(j, "closed_form"), "closed_form");
  check.expansion = decode_big_vector(field(j, "expansion"), "expansion");
  check.equal = expect_bool(field(j, "equal"), "equal");
  return check;
}

}  // namespace clm
