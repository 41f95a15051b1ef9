#include "mnp/json_io.hpp"

namespace mnp {

namespace {

std::optional<GroupParams> params_of(const Json& j, const std::optional<GroupParams>& fallback) {
    if (j.is_object() && j.contains("rank") && j.contains("class")) {
        GroupParams p{j.at("rank").get<int>(), j.at("class").get<int>()};
        validate(p);
        return p;
    }
    return fallback;
}

Json vector_to_json(const IntVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(integer_to_json(x));
    return out;
}

GroupParams params_from_first(const Json& items, const char* key, const std::optional<GroupParams>& fallback) {
    if (fallback) return *fallback;
    for (const auto& item : items) {
        const Json& u = key ? item.at(key) : item;
        if (auto p = params_of(u, std::nullopt)) return *p;
    }
    throw ParseError("cannot determine rank and class; pass them explicitly");
}

}  // namespace

Json integer_to_json(const Integer& x) {
    if (x.fits_slong_p()) return Json(static_cast<long long>(x.get_si()));
    return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw ParseError("invalid integer string '" + j.get<std::string>() + "'");
        }
    }
    throw ParseError("expected an integer, got " + j.dump());
}

Json element_to_json(const Element& x) {
    Json derived = Json::array();
    for (const auto& [c, v] : x.derived().terms()) derived.push_back({{"seq", c.seq}, {"coef", integer_to_json(v)}});
    return {{"rank", x.params().rank},
            {"class", x.params().cls},
            {"exp", vector_to_json(x.exp())},
            {"derived", derived}};
}

Element element_from_json(const Json& j, const std::optional<GroupParams>& params) {
    if (j.is_string()) {
        if (!params) throw ParseError("word-string element needs explicit rank and class");
        return parse_element(j.get<std::string>(), *params);
    }
    if (!j.is_object()) throw ParseError("element must be an object or a word string");
    try {
        GroupParams p{j.at("rank").get<int>(), j.at("class").get<int>()};
        if (params && !(p == *params)) throw ParamsMismatch();
        std::vector<Integer> exp;
        for (const auto& e : j.at("exp")) exp.push_back(integer_from_json(e));
        DerivedVector t;
        if (j.contains("derived")) {
            for (const auto& term : j.at("derived")) {
                BasicCommutator c{term.at("seq").get<std::vector<int>>()};
                if (!is_basic_shape(c.seq)) throw ParseError("derived term is not a basic commutator");
                if (c.weight() > p.cls) throw ParseError("derived term exceeds the class");
                t.add(c, integer_from_json(term.at("coef")));
            }
        }
        return Element(p, std::move(exp), std::move(t));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed element JSON: ") + e.what());
    }
}

Json auto_spec_to_json(const AutoSpec& f) {
    Json images = Json::array();
    for (const auto& x : f.images) images.push_back(element_to_json(x));
    return {{"images", images}};
}

AutoSpec auto_spec_from_json(const Json& j, const std::optional<GroupParams>& params) {
    try {
        const Json& images = j.at("images");
        GroupParams p = params_from_first(images, nullptr, params_of(j, params));
        std::vector<Element> out;
        for (const auto& x : images) out.push_back(element_from_json(x, p));
        return AutoSpec::from_images(p, std::move(out));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed automorphism JSON: ") + e.what());
    }
}

Json gen_inner_to_json(const GenInnerData& data) {
    Json pairs = Json::array();
    for (const auto& [u, l] : data.pairs) pairs.push_back({{"u", element_to_json(u)}, {"lambda", integer_to_json(l)}});
    return {{"rank", data.params.rank}, {"class", data.params.cls}, {"pairs", pairs}};
}

GenInnerData gen_inner_from_json(const Json& j, const std::optional<GroupParams>& params) {
    try {
        const Json& pairs = j.at("pairs");
        GroupParams p = params_from_first(pairs, "u", params_of(j, params));
        std::vector<GenInnerPair> raw;
        for (const auto& pr : pairs) raw.push_back({element_from_json(pr.at("u"), p), integer_from_json(pr.at("lambda"))});
        return GenInnerData(p, std::move(raw));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed generalized-inner JSON: ") + e.what());
    }
}

Json poly_auto_to_json(const PolyAutoData& data) {
    Json pairs = Json::array();
    for (const auto& [u, e] : data.pairs) pairs.push_back({{"u", element_to_json(u)}, {"epsilon", integer_to_json(e)}});
    return {{"rank", data.params.rank}, {"class", data.params.cls}, {"pairs", pairs}};
}

PolyAutoData poly_auto_from_json(const Json& j, const std::optional<GroupParams>& params) {
    try {
        const Json& pairs = j.at("pairs");
        GroupParams p = params_from_first(pairs, "u", params_of(j, params));
        PolyAutoData out{p, {}};
        for (const auto& pr : pairs) out.pairs.push_back({element_from_json(pr.at("u"), p), integer_from_json(pr.at("epsilon"))});
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed polynomial-automorphism JSON: ") + e.what());
    }
}

Json refusal_to_json(const NotGeneralizedInner& r) {
    return {{"witness_generator", r.witness_generator},
            {"layer", r.layer},
            {"defect", vector_to_json(r.defect)},
            {"certificate", {{"multiplier", vector_to_json(r.certificate.multiplier)},
                             {"modulus", integer_to_json(r.certificate.modulus)}}},
            {"reason", r.reason}};
}

Json selfcheck_to_json(const SelfcheckReport& r) {
    return {{"pass", r.pass},
            {"basics_checked", r.basics_checked},
            {"top_commutators_checked", r.top_commutators_checked},
            {"witnesses_checked", r.witnesses_checked},
            {"failures", r.failures}};
}

}  // namespace mnp
