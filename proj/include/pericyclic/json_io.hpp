#pragma once

// JSON encodings of the value types.  Parsers throw InputError on malformed
// documents and propagate the validating constructors' errors.

#include <json.hpp>

#include "pericyclic/arc_map.hpp"
#include "pericyclic/cyclic_sets.hpp"
#include "pericyclic/finite_category.hpp"
#include "pericyclic/gamma.hpp"
#include "pericyclic/points.hpp"
#include "pericyclic/presentations.hpp"
#include "pericyclic/rf.hpp"
#include "pericyclic/ternary.hpp"

namespace peri {

using Json = nlohmann::ordered_json;

Json to_json(const TritVector& v);
Json to_json(const CarryPolynomial& p);
Json to_json(const ArcMap& f);
Json to_json(const GroupoidMor& f);
Json to_json(const KaledinFunctor& f);
Json to_json(const RFMor& f);
Json to_json(const RationalAngle& a);
Json to_json(const SRFMor& f);
Json to_json(const PiMor& p);
Json to_json(const TruncatedKCyclicSet& y);
Json to_json(const Divisor& d);
Json to_json(const Supernatural& s);

ArcMap arc_from_json(const Json& j);
GroupoidMor groupoid_from_json(const Json& j);
KaledinFunctor kaledin_from_json(const Json& j);
RFMor rf_from_json(const Json& j);
SRFMor srf_from_json(const Json& j);
PiMor pi_from_json(const Json& j);
FiniteCategory category_from_json(const Json& j);
/// Accepts the table layout written by to_json; labels may be omitted.
TruncatedKCyclicSet cyclic_set_from_json(const Json& j);
Divisor divisor_from_json(const Json& j);
Supernatural supernatural_from_json(const Json& j);

}  // namespace peri
