/// @file json_detail.hpp
/// @brief Internal nlohmann-typed converters shared by the scenario parser
/// and the report builders.  Not installed; vendor/json.hpp stays a private
/// dependency of the core library.

#pragma once

#include <genera/json_io.hpp>

#include <json.hpp>

#include <string>

namespace genera::detail {

/// Key order is preserved so canonical output and replay are byte-stable.
using Json = nlohmann::ordered_json;

// ---- parsing helpers (path-annotated) ----

[[noreturn]] inline void fail(const std::string& msg, const std::string& path) {
    throw ScenarioError(msg, path);
}

inline const Json& member(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) fail("expected an object", path);
    auto it = j.find(key);
    if (it == j.end()) fail(std::string("missing field '") + key + "'", path);
    return *it;
}

inline int get_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) fail("expected an integer", path);
    return j.get<int>();
}

inline std::string get_string(const Json& j, const std::string& path) {
    if (!j.is_string()) fail("expected a string", path);
    return j.get<std::string>();
}

/// Rationals arrive as integers or as strings like "-3/4".
Rational get_rational(const Json& j, const std::string& path);

// ---- descriptor converters ----

SpaceDesc space_from_json(const Json& j, const std::string& path);
Json space_to_json(const SpaceDesc& d);

ActionDesc action_from_json(const Json& j, const std::string& path);
Json action_to_json(const ActionDesc& a);

BundlePtr bundle_from_json(const Json& j, const std::string& path);
Json bundle_to_json_obj(const BundlePtr& e);

Scenario scenario_from_json_obj(const Json& j);
Json scenario_to_json_obj(const Scenario& s);

// ---- report value converters (exact scalars as strings) ----

Json rational_json(const Rational& q);        // string
Json cyc_json(const CycNumber& c);            // string or {modulus, coefficients}
Json qseries_json(const QSeries<Rational>& s);
Json qseries_cyc_json(const QSeries<CycNumber>& s);
Json ypoly_json(const LaurentPoly<Rational>& p);
Json index_value_json(const IndexValue& v);

Json rf_json(const RFq& f);  // {var, numerator:{min_exp, coefficients}, denominator:{...}}
Json rfc_json(const RFc& f);
Json equiv_value_json(const EquivValue& v);

}  // namespace genera::detail
