#pragma once

#include <string>

#include <json.hpp>

#include "ternary/markings.hpp"
#include "ternary/metrics.hpp"
#include "ternary/polyhedral.hpp"
#include "ternary/poset.hpp"
#include "ternary/relation.hpp"

namespace ternary::io {

using Json = nlohmann::ordered_json;

/** Parse text; throws ValidationError naming `source` and the parser position. */
Json parse(const std::string& text, const std::string& source);
Json read_file(const std::string& path);

/** Same relation with elements sorted by name. */
TernaryRelation canonical(const TernaryRelation& rel);

/** Elements sorted, each triple sorted, triples sorted. */
Json to_json(const TernaryRelation& rel);
/** Returns the canonical relation. */
TernaryRelation relation_from_json(const Json& j);

Json to_json(const SimplicialPoset2& p);
SimplicialPoset2 poset_from_json(const Json& j);

Json to_json(const VectorConfiguration& cfg);
VectorConfiguration vectors_from_json(const Json& j);

/** Integers fitting in 64 bits as numbers, larger ones as decimal strings. */
Json to_json(const Integer& x);
Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);
Integer integer_from_json(const Json& j, const std::string& where);
IntMatrix int_matrix_from_json(const Json& j, const std::string& where);

Json to_json(const ConeRays& rays);
ConeRays rays_from_json(const Json& j);

Json to_json(const RatVector& v);

Json to_json(const Marking& m, const SimplicialPoset2& p);
Marking marking_from_json(const Json& j, const SimplicialPoset2& p);

Json to_json(const PosetMetric& d, const SimplicialPoset2& p);
PosetMetric metric_from_json(const Json& j, const SimplicialPoset2& p);

/** {"edges":[ids], "vertices":[ids]}; vertices default to the edge endpoints. */
Json to_json(const Subgraph& g, const SimplicialPoset2& p);
Subgraph subgraph_from_json(const Json& j, const SimplicialPoset2& p);

}  // namespace ternary::io
