#pragma once

#include <json.hpp>

#include "tqft/catalan.hpp"
#include "tqft/cellgraph.hpp"
#include "tqft/frobenius.hpp"
#include "tqft/toprec.hpp"
#include "tqft/zoo.hpp"

namespace tqft::json_io {

using nlohmann::json;

// Every reader throws InputError with the offending field on malformed input.
Scalar scalar_from_json(const json& j);
json scalar_to_json(const Scalar& s);
Vector vector_from_json(const json& j);
json vector_to_json(const Vector& v);

// { "dim", "basis", "mult": [i][j][k] = c_ij^k, "counit", "commutative" }
FrobeniusAlgebra algebra_from_json(const json& j);
json algebra_to_json(const FrobeniusAlgebra& alg);
json report_to_json(const ValidationReport& r);

// { "order", "identity", "table" }
GroupTable group_from_json(const json& j);
json group_to_json(const GroupTable& g);

// { "n", "rotation", "edges", "arrows", optional "labels" }
CellGraph graph_from_json(const json& j);
json graph_to_json(const CellGraph& g);

// { "discs": [ { "x": [[exp, "p/q"], ...], "y": [...] } ], "truncation" }
LocalSpectralCurve curve_from_json(const json& j, int default_truncation);
json curve_to_json(const LocalSpectralCurve& c);

// { "g", "n", "entries": [ { "discs", "slots", "terms": [ { "exponents", "coefficient" } ] } ] }
json correlator_to_json(const Correlator& c);
Correlator correlator_from_json(const json& j);

json mpoly_to_json(const MPoly& p);
MPoly mpoly_from_json(const json& j, int nvars);

// [ { "g", "n", "d", "value" } ]
json intersections_to_json(const IntersectionTable& t);
IntersectionTable intersections_from_json(const json& j);

// { "orders": [ { "order", "vanishes", "residual" } ], "unstable_pins_match", "ok" }
json wkb_to_json(const WkbReport& r);

}  // namespace tqft::json_io
