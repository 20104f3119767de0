#pragma once

#include <string>

#include "json.hpp"

#include "clm/chain.hpp"
#include "clm/collineation.hpp"
#include "clm/forms.hpp"
#include "clm/identities.hpp"
#include "clm/stability.hpp"

namespace clm {

using Json = nlohmann::json;

// Canonical JSON conventions, shared by every encoder here:
//   - objects use sorted keys (the default ordered map of the library);
//   - rationals are reduced strings, "p" or "p/q";
//   - integers that fit a signed 64-bit value are JSON numbers, anything
//     larger is a decimal string;
//   - polynomials are arrays of coefficient strings, ascending, with no
//     trailing zeros (the zero polynomial is []);
//   - subspaces carry their canonical echelon basis.
// Decoders accept any spanning set for a subspace and either numbers or
// strings for scalars, so canonical output always re-parses to an equal
// value and canonical input re-serializes byte-identically.
std::string canonical_dump(const Json& j);

Json encode(const Rat& q);
Json encode(const Int& n);
Json encode(const RatMatrix& m);
Json encode(const Poly& p);
Json encode(const PolyMatrix& m);
Json encode(const Split& s);
Json encode(const Subspace& u);
Json encode(const Context& ctx);
Json encode(const Stage& stage);
Json encode(const CompleteCollineation& cc);
Json encode(const ValidationReport& report);
Json encode(const FlagPair& flags);
Json encode(const NodalChain& chain);
Json encode(const SinkSource& ss);
Json encode(const GraphCycleShape& shape);
Json encode(const ChainReport& report);
Json encode(const GradedObject& graded);
Json encode(const StabilityReport& report);
Json encode(const WeightSupport& support);
Json encode(const WallLocus& locus);
Json encode(const DimReport& report);
Json encode(const IsotropyReport& report);
Json encode(const IdentityResult& result);
Json encode(const SeriesCheck& check);
Json encode(const SectionSeriesCheck& check);

Rat decode_rat(const Json& j);
Int decode_int(const Json& j);
RatMatrix decode_matrix(const Json& j);
Poly decode_poly(const Json& j);
PolyMatrix decode_poly_matrix(const Json& j);
Split decode_split(const Json& j);
Subspace decode_subspace(const Json& j);
Context decode_context(const Json& j);
Stage decode_stage(const Json& j);
CompleteCollineation decode_collineation(const Json& j);
ValidationReport decode_validation_report(const Json& j);
FlagPair decode_flag_pair(const Json& j);
NodalChain decode_chain(const Json& j);
SinkSource decode_sink_source(const Json& j);
GraphCycleShape decode_shape(const Json& j);
ChainReport decode_chain_report(const Json& j);
GradedObject decode_graded_object(const Json& j);
StabilityReport decode_stability_report(const Json& j);
WeightSupport decode_weight_support(const Json& j);
WallLocus decode_wall_locus(const Json& j);
DimReport decode_dim_report(const Json& j);
IsotropyReport decode_isotropy_report(const Json& j);
IdentityResult decode_identity_result(const Json& j);
SeriesCheck decode_series_check(const Json& j);
SectionSeriesCheck decode_section_series_check(const Json& j);

}  // namespace clm
