#pragma once

#include <json.hpp>

#include "sharptop/duality.hpp"
#include "sharptop/funcspaces.hpp"
#include "sharptop/seminorms.hpp"

namespace sharptop {

using Json = nlohmann::ordered_json;

// Exact rationals travel as "p/q" strings so round trips are lossless.

Json to_json(const SymbolicNet& net);
SymbolicNet symbolic_from_json(const Json& j);

Json to_json(const PiecewiseNet& net);
PiecewiseNet piecewise_from_json(const Json& j);

Json to_json(const GenScalar& s);
GenScalar gen_scalar_from_json(const Json& j);

Json to_json(const GenVec& u);
GenVec gen_vec_from_json(const Json& j);

Json to_json(const CompactBox& box);
CompactBox box_from_json(const Json& j);

/// {"kind":"pairing_vector","w":[net,...]} or {"kind":"blackbox","id":...}.
/// Blackbox ids resolve against a small registry of built-in demo actions.
Json to_json(const Functional& f);
Functional functional_from_json(const Json& j);

/// {"seminorms":[{"kind":"abs_e","coord":0,"shift":"0"} | {"kind":"max","dim":2,"shifts":[...]}]}
SeminormFamily family_from_json(const Json& j);

/// {"balls":[{"seminorm":{...},"eta":1.0,"shift":"0"}]}
ConvexSetSpec convex_spec_from_json(const Json& j);

Json to_json(const ValEstimate& v);
Json to_json(const Classification& c);

/// Parses a JSON document, rethrowing library errors as ParseError.
Json parse_json(const std::string& text);

/// Doubles rendered via nlohmann (shortest round-trip form); exact values as strings.
std::string dump_report(const Json& j);

} // namespace sharptop
