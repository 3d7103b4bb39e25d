#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "exg/bounds.hpp"
#include "exg/graph.hpp"
#include "exg/ortho.hpp"
#include "exg/scenario.hpp"
#include "exg/sets.hpp"

namespace exg {

using Json = nlohmann::ordered_json;

// All floats in reports pass through here: rounded to 9 significant digits
// so golden files stay stable above the solver tolerance.
double round9(double x);

// {"n": int, "edges": [[i,j],...], "weights": ["p/q",...]}  (weights optional)
Json graph_to_json(const VertexWeightedGraph& g);
VertexWeightedGraph graph_from_json(const Json& j);

// {"tests": [{"id": str, "outcomes": [str,...]},...], "contexts": [[id,...],...]}
Scenario scenario_from_json(const Json& j);

// {"terms": [{"weight": "p/q", "event": {id: outcome,...}},...]}
SExpression sexpression_from_json(const Json& j, const Scenario& s);

// {"p": [float,...]}
std::vector<double> assignment_from_json(const Json& j);

// {"dim": d, "handle": [f,...], "vectors": [[f,...],...]}
Json or_to_json(const OrthonormalRepresentation& rep);
OrthonormalRepresentation or_from_json(const Json& j);

Json bounds_report_to_json(const BoundsReport& rep);

Json verdict_to_json(const MembershipVerdict& v);

Json event_to_json(const Scenario& s, const Event& e);

Json parse_json_text(const std::string& text);  // InputError on malformed JSON
Json load_json_file(const std::string& path);

}  // namespace exg
