#pragma once

// JSON and text encodings for the external formats.

#include <string>

#include "json.hpp"
#include "tautrel/kappa_ring.hpp"
#include "tautrel/omega_expansion.hpp"
#include "tautrel/point_algebra.hpp"
#include "tautrel/relation_solver.hpp"

namespace tautrel {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& value);  // "p/q"
Rational rational_from_json(const Json& j);

Json to_json(const KappaMonomial& m);  // [[1,2],[3,1]]
KappaMonomial kappa_monomial_from_json(const Json& j);

/// {"n":3,"c":1,"blocks":[[[1,2],3],[[3],1]]}
Json to_json(const WeightedPartition& x);
WeightedPartition weighted_partition_from_json(const Json& j);

/// {"genus":G,"n":N,"multiplier":<partition or null>,"degree":D,
///  "basis":[...],"vectors":{"[m1,...]":["p/q",...]}}
/// Vectors are written in the requested convention.
Json to_json(const RelationVectorMap& map, KappaConvention convention = KappaConvention::topological);
/// Inverse of to_json for the topological convention. Throws
/// std::invalid_argument (or nlohmann::json::exception) on malformed input.
RelationVectorMap relation_map_from_json(const Json& j);

/// Relation-map JSON plus "convention", "rank", "pivots" (basis indices) and
/// the reduced relations as primitive integer vectors (as decimal strings).
Json relations_report_json(const RelationVectorMap& map, const RelationSet& reduced, KappaConvention convention);

/// "# ..." header, one "<relation> = 0" line per reduced relation and, when
/// the span has codimension one, the canonical presentation against k_D.
std::string relations_report_text(const RelationVectorMap& map, const RelationSet& reduced,
                                  KappaConvention convention);

/// Header "degree,<basis...>", then one row per reduced relation with the
/// integer-cleared coefficients in basis order.
std::string relations_report_csv(const RelationSet& reduced, KappaConvention convention);

/// "a*m = b*pivot" with integers a > 0 and b, e.g. "5*k2^2 = 226*k4".
std::string format_presentation(const KappaMonomial& m, const Rational& value, const KappaMonomial& pivot);

/// 64-bit FNV-1a, hex encoded.
std::string fnv1a_hex(const std::string& data);

}  // namespace tautrel
