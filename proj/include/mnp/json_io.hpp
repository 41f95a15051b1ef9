#pragma once

#include "mnp/autos.hpp"
#include "mnp/magnus.hpp"
#include "mnp/normality.hpp"

#include <json.hpp>

#include <optional>

namespace mnp {

using Json = nlohmann::json;

/// Machine-size integers are emitted as numbers, larger ones as decimal strings.
Json integer_to_json(const Integer& x);
Integer integer_from_json(const Json& j);

/// {"rank":d,"class":k,"exp":[...],"derived":[{"seq":[...],"coef":...}]}
Json element_to_json(const Element& x);
/// Accepts the object form, or a word string when `params` is given.
Element element_from_json(const Json& j, const std::optional<GroupParams>& params = std::nullopt);

/// {"images":[Element,...]}; the optional top-level "rank"/"class" let images be word strings.
Json auto_spec_to_json(const AutoSpec& f);
AutoSpec auto_spec_from_json(const Json& j, const std::optional<GroupParams>& params = std::nullopt);

/// {"pairs":[{"u":Element,"lambda":...}]}
Json gen_inner_to_json(const GenInnerData& data);
GenInnerData gen_inner_from_json(const Json& j, const std::optional<GroupParams>& params = std::nullopt);

/// {"pairs":[{"u":Element,"epsilon":...}]}
Json poly_auto_to_json(const PolyAutoData& data);
PolyAutoData poly_auto_from_json(const Json& j, const std::optional<GroupParams>& params = std::nullopt);

/// {"witness_generator":i,"layer":w,"defect":[...],"certificate":{"multiplier":[...],"modulus":q},"reason":...}
Json refusal_to_json(const NotGeneralizedInner& r);

Json selfcheck_to_json(const SelfcheckReport& r);

}  // namespace mnp
