#pragma once

// JSON encodings of the library types. Field elements are strings ("p/q" over
// Q, "[c0, c1, ...]" in an extension); structural counts and indices are
// plain JSON integers.

#include <json.hpp>

#include "b3q/analysis.hpp"
#include "b3q/spectral.hpp"

namespace b3q {

using Json = nlohmann::json;

/// "Q", "gaussian", "zeta5", or an ascending coefficient list of the modulus.
ContextPtr parse_context(const Json& j);
Json context_to_json(const ContextPtr& ctx);

FieldElement element_from_json(const ContextPtr& ctx, const Json& j);
Json to_json(const FieldElement& x);
Json to_json(const Polynomial& p);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const ContextPtr& ctx, const Json& j);

/// {dim, X, h?, f?, variant?}
Json to_json(const RepSpec& spec);
RepSpec rep_spec_from_json(const ContextPtr& ctx, const Json& j);
Json to_json(const Representation& rep);

Json to_json(const SpectralReport& r);
Json to_json(const PredicateValue& p);
/// {Y: [...], line: [a, b]?, complement_found}
Json to_json(const Witness& w);
Witness witness_from_json(const ContextPtr& ctx, const Json& j);
Json to_json(const DeferredRoots& d);
Json to_json(const CensusReport& r);

}  // namespace b3q
