#pragma once

// JSON encoding of the domain types. Field names follow the type definitions; decoding
// rejects unknown fields (ParseError) and validates the result (InvalidInvariants).

#include <json.hpp>

#include "bv/ellk3.hpp"
#include "bv/fibration.hpp"
#include "bv/hodge.hpp"
#include "bv/invariants.hpp"
#include "bv/lefschetz.hpp"
#include "bv/toricbase.hpp"
#include "bv/weierstrass.hpp"

namespace bv {

using json = nlohmann::ordered_json;

void to_json(json& j, const Order& v);
void from_json(const json& j, Order& v);
void to_json(json& j, const EllipticAutomorphismProfile& v);
void from_json(const json& j, EllipticAutomorphismProfile& v);
void to_json(json& j, const FixedLocusN2& v);
void from_json(const json& j, FixedLocusN2& v);
void to_json(json& j, const FixedLocusN3& v);
void from_json(const json& j, FixedLocusN3& v);
void to_json(json& j, const FixedLocusN4& v);
void from_json(const json& j, FixedLocusN4& v);
void to_json(json& j, const FixedLocusN6& v);
void from_json(const json& j, FixedLocusN6& v);
void to_json(json& j, const EigenspaceDims& v);
void from_json(const json& j, EigenspaceDims& v);
void to_json(json& j, const ChiConstraint& v);
void from_json(const json& j, ChiConstraint& v);
void to_json(json& j, const HodgeDiamond& v);
void from_json(const json& j, HodgeDiamond& v);
void to_json(json& j, const FamilyFlags& v);
void from_json(const json& j, FamilyFlags& v);
void to_json(json& j, const BaseSurface& v);
void from_json(const json& j, BaseSurface& v);
void to_json(json& j, const DivisorClass& v);
void from_json(const json& j, DivisorClass& v);
void to_json(json& j, const KodairaType& v);
void to_json(json& j, const SectionFactor& v);
void to_json(json& j, const SymbolicSection& v);
void to_json(json& j, const WeierstrassModel& v);
void to_json(json& j, const ComponentDesc& v);
void to_json(json& j, const FiberDescriptor& v);
void to_json(json& j, const MultiplicityProfile& v);
void from_json(const json& j, MultiplicityProfile& v);

KodairaType parse_kodaira(std::string_view text);

// Parse text as JSON, mapping syntax errors to ParseError.
json parse_json(std::string_view text);

}  // namespace bv
