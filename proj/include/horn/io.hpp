#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "horn/certificate.hpp"
#include "horn/gale.hpp"
#include "horn/horn_map.hpp"
#include "horn/mle.hpp"
#include "horn/poly.hpp"
#include "horn/types.hpp"

// JSON interchange for every public type.  All exact values travel as
// decimal strings ("n" or "n/d") so any reader with big integers can consume
// them losslessly; matrices are row-major {"rows", "cols", "entries"};
// output is canonical (sorted keys, two-space indent, trailing newline) so
// identical data always serializes to identical bytes.
namespace horn {

using Json = nlohmann::json;

// Parsing and file plumbing.  Malformed text raises InputError carrying the
// parser's position diagnostics.
Json parseJson(const std::string& text);
Json readJsonFile(const std::string& path);
void writeJsonFile(const std::string& path, const Json& j);
std::string dumpJson(const Json& j);

// Vectors serialize as arrays of strings; integer tokens are accepted on
// input for convenience.
Json toJson(const IntVector& v);
Json toJson(const RatVector& v);
IntVector intVectorFromJson(const Json& j);
RatVector ratVectorFromJson(const Json& j);

Json toJson(const IntMatrix& M);
Json toJson(const RatMatrix& M);
IntMatrix intMatrixFromJson(const Json& j);
RatMatrix ratMatrixFromJson(const Json& j);

// {"vars": ["p1", ...], "terms": [{"coeff": "n/d", "exps": [e, ...]}, ...]}
// with terms in the polynomial's canonical (graded lexicographic) order.
// "vars" also accepts a bare count on input.
Json toJson(const MultiPoly& p);
MultiPoly polyFromJson(const Json& j);

// {"d": [...], "B": <matrix>}.  Reading does NOT validate the Horn
// invariants: callers that require a genuine map pass the fields through
// makeHornMap, while checkers deliberately consume corrupted data.
Json toJson(const HornMap& H);
HornMap hornMapFromJson(const Json& j);

// Mirrors the FactoredMap fields; reading is raw as above.
Json toJson(const FactoredMap& F);
FactoredMap factoredMapFromJson(const Json& j);

// {"n", "m", "k", "B", "Bsat", "C", "A"}; the scalar fields are redundant
// with the matrix shapes and are cross-checked on input.
Json toJson(const GaleData& G);
GaleData galeDataFromJson(const Json& j);

Json toJson(const Certificate& c);

// {"name", "horn", "simplex", "equations"}.  Reading validates through
// makeModelSpec; a registry file is a JSON array of these.
Json toJson(const ModelSpec& M);
ModelSpec modelSpecFromJson(const Json& j, unsigned long seed = kDefaultSeed);
std::vector<ModelSpec> modelListFromJson(const Json& j, unsigned long seed = kDefaultSeed);

}  // namespace horn
