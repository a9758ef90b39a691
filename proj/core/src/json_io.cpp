/// @file json_io.cpp
/// @brief Scenario parsing, resolution, and canonical serialization.

#include "json_detail.hpp"

#include <set>
#include <utility>

namespace genera {
namespace detail {

Rational get_rational(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
        try {
            return Rational::from_string(j.get<std::string>());
        } catch (const std::exception& e) {
            fail(std::string("bad rational: ") + e.what(), path);
        }
    }
    fail("expected an integer or a rational string", path);
}

// ---- spaces ----

SpaceDesc space_from_json(const Json& j, const std::string& path) {
    SpaceDesc d;
    const std::string type = get_string(member(j, "type", path), path + ".type");
    if (type == "point") {
        d.kind = SpaceDesc::Kind::Point;
    } else if (type == "cp") {
        d.kind = SpaceDesc::Kind::CP;
        d.n = get_int(member(j, "n", path), path + ".n");
    } else if (type == "product") {
        d.kind = SpaceDesc::Kind::Product;
        const Json& f = member(j, "factors", path);
        if (!f.is_array() || f.size() < 2)
            fail("'factors' must be an array of at least two spaces", path + ".factors");
        for (size_t i = 0; i < f.size(); ++i)
            d.factors.push_back(
                space_from_json(f[i], path + ".factors[" + std::to_string(i) + "]"));
    } else if (type == "hypersurface") {
        d.kind = SpaceDesc::Kind::Hypersurface;
        d.m = get_int(member(j, "m", path), path + ".m");
        d.d = get_int(member(j, "d", path), path + ".d");
    } else if (type == "even_sphere") {
        d.kind = SpaceDesc::Kind::EvenSphere;
        d.n = get_int(member(j, "n", path), path + ".n");
    } else {
        fail("unknown space type '" + type + "'", path + ".type");
    }
    return d;
}

Json space_to_json(const SpaceDesc& d) {
    Json j;
    switch (d.kind) {
        case SpaceDesc::Kind::Point:
            j["type"] = "point";
            break;
        case SpaceDesc::Kind::CP:
            j["type"] = "cp";
            j["n"] = d.n;
            break;
        case SpaceDesc::Kind::Product: {
            j["type"] = "product";
            Json f = Json::array();
            for (const auto& x : d.factors) f.push_back(space_to_json(x));
            j["factors"] = std::move(f);
            break;
        }
        case SpaceDesc::Kind::Hypersurface:
            j["type"] = "hypersurface";
            j["m"] = d.m;
            j["d"] = d.d;
            break;
        case SpaceDesc::Kind::EvenSphere:
            j["type"] = "even_sphere";
            j["n"] = d.n;
            break;
    }
    return j;
}

// ---- actions ----

ActionDesc action_from_json(const Json& j, const std::string& path) {
    const std::string type = get_string(member(j, "type", path), path + ".type");
    if (type != "linear_cp") fail("unknown action type '" + type + "'", path + ".type");
    ActionDesc a;
    const Json& w = member(j, "weights", path);
    if (!w.is_array() || w.empty()) fail("'weights' must be a non-empty array", path + ".weights");
    for (size_t i = 0; i < w.size(); ++i) {
        const std::string p = path + ".weights[" + std::to_string(i) + "]";
        if (!w[i].is_number_integer()) fail("expected an integer weight", p);
        a.weights.push_back(w[i].get<long>());
    }
    if (j.contains("d")) a.d = get_int(j["d"], path + ".d");
    return a;
}

Json action_to_json(const ActionDesc& a) {
    Json j;
    j["type"] = "linear_cp";
    j["weights"] = a.weights;
    if (a.d) j["d"] = *a.d;
    return j;
}

// ---- bundles ----

namespace {

TParam tparam_from_json(const Json& j, const std::string& path) {
    TParam t;
    if (!j.is_object()) fail("expected a t-parameter object {sign, q, y}", path);
    if (j.contains("sign")) t.sign = get_int(j["sign"], path + ".sign");
    if (j.contains("q")) t.q_exp = get_int(j["q"], path + ".q");
    if (j.contains("y")) t.y_exp = get_int(j["y"], path + ".y");
    if (t.sign != 1 && t.sign != -1) fail("t.sign must be +1 or -1", path + ".sign");
    for (const auto& item : j.items())
        if (item.key() != "sign" && item.key() != "q" && item.key() != "y")
            fail("unknown t-parameter field '" + item.key() + "'", path);
    return t;
}

Json tparam_to_json(const TParam& t) {
    Json j;
    j["sign"] = t.sign;
    j["q"] = t.q_exp;
    j["y"] = t.y_exp;
    return j;
}

std::vector<BundlePtr> bundle_list(const Json& j, const std::string& path, size_t min) {
    if (!j.is_array() || j.size() < min)
        fail("expected an array of at least " + std::to_string(min) + " bundle(s)", path);
    std::vector<BundlePtr> out;
    for (size_t i = 0; i < j.size(); ++i)
        out.push_back(bundle_from_json(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

}  // namespace

BundlePtr bundle_from_json(const Json& j, const std::string& path) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "T") return bundle_tangent();
        if (s == "T*") return bundle_tangent_dual();
        if (s == "T_C") return bundle_tangent_c();
        fail("unknown bundle name '" + s + "' (use T, T*, T_C)", path);
    }
    if (!j.is_object() || j.size() != 1)
        fail("expected a bundle name or a single-key bundle object", path);
    const std::string key = j.begin().key();
    const Json& v = j.begin().value();
    const std::string p = path + "." + key;

    if (key == "line") {
        if (!v.is_array() || v.empty()) fail("'line' takes a non-empty coefficient array", p);
        std::vector<Rational> coeffs;
        for (size_t i = 0; i < v.size(); ++i)
            coeffs.push_back(get_rational(v[i], p + "[" + std::to_string(i) + "]"));
        return bundle_line(std::move(coeffs));
    }
    if (key == "kroot") {
        if (!v.is_array() || v.size() != 2) fail("'kroot' takes [N, alpha]", p);
        return bundle_kroot(get_int(v[0], p + "[0]"), get_int(v[1], p + "[1]"));
    }
    if (key == "sum") return bundle_sum(bundle_list(v, p, 1));
    if (key == "tensor") return bundle_tensor(bundle_list(v, p, 1));
    if (key == "diff") {
        auto args = bundle_list(v, p, 2);
        if (args.size() != 2) fail("'diff' takes exactly two bundles", p);
        return bundle_diff(args[0], args[1]);
    }
    if (key == "extpower" || key == "sympower") {
        if (!v.is_array() || v.size() != 2)
            fail("'" + key + "' takes [i, bundle]", p);
        const int i = get_int(v[0], p + "[0]");
        BundlePtr arg = bundle_from_json(v[1], p + "[1]");
        return key == "extpower" ? bundle_ext_power(i, std::move(arg))
                                 : bundle_sym_power(i, std::move(arg));
    }
    if (key == "lambda_series" || key == "sym_series") {
        if (!v.is_array() || v.size() != 2)
            fail("'" + key + "' takes [t, bundle]", p);
        const TParam t = tparam_from_json(v[0], p + "[0]");
        BundlePtr arg = bundle_from_json(v[1], p + "[1]");
        return key == "lambda_series" ? bundle_lambda_series(t, std::move(arg))
                                      : bundle_sym_series(t, std::move(arg));
    }
    if (key == "qproduct") {
        if (v.is_string()) {
            const std::string s = v.get<std::string>();
            if (s == "level2") return bundle_qproduct(QFamily::Level2);
            if (s == "dirac") return bundle_qproduct(QFamily::DiracCusp);
            fail("unknown qproduct family '" + s + "'", p);
        }
        if (v.is_object() && v.contains("level_n"))
            return bundle_qproduct(QFamily::LevelN, get_int(v["level_n"], p + ".level_n"));
        fail("'qproduct' takes \"level2\", \"dirac\", or {\"level_n\": N}", p);
    }
    fail("unknown bundle operation '" + key + "'", p);
}

Json bundle_to_json_obj(const BundlePtr& e) {
    using K = BundleExpr::Kind;
    Json j;
    switch (e->kind) {
        case K::Tangent:
            return Json("T");
        case K::TangentDual:
            return Json("T*");
        case K::TangentC:
            return Json("T_C");
        case K::Line: {
            Json c = Json::array();
            for (const auto& q : e->line) c.push_back(q.str());
            j["line"] = std::move(c);
            return j;
        }
        case K::KRoot:
            j["kroot"] = Json::array({e->N, e->alpha});
            return j;
        case K::Sum:
        case K::Tensor: {
            Json a = Json::array();
            for (const auto& x : e->args) a.push_back(bundle_to_json_obj(x));
            j[e->kind == K::Sum ? "sum" : "tensor"] = std::move(a);
            return j;
        }
        case K::Diff:
            j["diff"] = Json::array(
                {bundle_to_json_obj(e->args[0]), bundle_to_json_obj(e->args[1])});
            return j;
        case K::ExtPower:
            j["extpower"] = Json::array({e->power, bundle_to_json_obj(e->args[0])});
            return j;
        case K::SymPower:
            j["sympower"] = Json::array({e->power, bundle_to_json_obj(e->args[0])});
            return j;
        case K::LambdaSeries:
            j["lambda_series"] =
                Json::array({tparam_to_json(e->t), bundle_to_json_obj(e->args[0])});
            return j;
        case K::SymSeries:
            j["sym_series"] =
                Json::array({tparam_to_json(e->t), bundle_to_json_obj(e->args[0])});
            return j;
        case K::QProduct:
            if (e->family == QFamily::Level2)
                j["qproduct"] = "level2";
            else if (e->family == QFamily::DiracCusp)
                j["qproduct"] = "dirac";
            else
                j["qproduct"] = Json{{"level_n", e->N}};
            return j;
    }
    fail("unserializable bundle expression", "bundle");
}

// ---- scenario ----

namespace {

const std::set<std::string>& known_ops() {
    static const std::set<std::string> ops = {
        "euler",      "signature",    "ahat",         "todd",        "chi_y",
        "loop_signature", "dirac_cusp", "level_n_loop", "level_n_cusp", "cusp_values"};
    return ops;
}

CycNumber y_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer() || j.is_string())
        return CycNumber(get_rational(j, path));
    if (j.is_object() && j.contains("minus_zeta_pow")) {
        const Json& a = j["minus_zeta_pow"];
        if (!a.is_array() || a.size() != 2)
            fail("'minus_zeta_pow' takes [N, beta]", path + ".minus_zeta_pow");
        return CycNumber::minus_zeta_pow(get_int(a[0], path + "[0]"),
                                         get_int(a[1], path + "[1]"));
    }
    if (j.is_object() && j.contains("cyclotomic")) {
        const Json& c = j["cyclotomic"];
        const std::string p = path + ".cyclotomic";
        const int mod = get_int(member(c, "modulus", p), p + ".modulus");
        const Json& arr = member(c, "coefficients", p);
        if (!arr.is_array()) fail("expected a coefficient array", p + ".coefficients");
        std::vector<Rational> coeffs;
        for (size_t i = 0; i < arr.size(); ++i)
            coeffs.push_back(get_rational(arr[i], p + ".coefficients[" + std::to_string(i) + "]"));
        try {
            return CycNumber::from_coeffs(mod, std::move(coeffs));
        } catch (const std::exception& e) {
            fail(e.what(), p);
        }
    }
    fail("expected a rational, {\"minus_zeta_pow\":[N,beta]}, or {\"cyclotomic\":{...}}",
         path);
}

Json y_to_json(const CycNumber& y) {
    if (const auto q = y.as_rational()) return Json(q->str());
    Json c;
    c["modulus"] = y.modulus();
    Json arr = Json::array();
    for (const auto& q : y.coeffs()) arr.push_back(q.str());
    c["coefficients"] = std::move(arr);
    Json j;
    j["cyclotomic"] = std::move(c);
    return j;
}

/// Default cover index of an operation: even for the half-weight genera,
/// 2N for cusp expansions with fractional K-lifts, 1 otherwise.
int default_cover(const std::string& op, int level) {
    if (op == "ahat" || op == "dirac_cusp") return 2;
    if (op == "level_n_cusp") return 2 * level;
    return 1;
}

}  // namespace

Scenario scenario_from_json_obj(const Json& j) {
    if (!j.is_object()) fail("scenario must be a JSON object", "");
    Scenario s;

    s.space_desc = space_from_json(member(j, "space", ""), "space");
    s.space = resolve_space(s.space_desc);

    s.op = get_string(member(j, "genus", ""), "genus");
    if (!known_ops().count(s.op)) fail("unknown operation '" + s.op + "'", "genus");

    if (j.contains("level")) s.level = get_int(j["level"], "level");
    if (j.contains("alpha")) s.alpha = get_int(j["alpha"], "alpha");
    if (j.contains("beta")) s.beta = get_int(j["beta"], "beta");

    if (s.op == "euler") s.genus = GenusKind::euler();
    else if (s.op == "signature") s.genus = GenusKind::signature();
    else if (s.op == "ahat") s.genus = GenusKind::ahat();
    else if (s.op == "todd") s.genus = GenusKind::todd();
    else if (s.op == "chi_y") s.genus = GenusKind::chi_y();

    if (j.contains("y")) {
        if (s.op != "chi_y") fail("'y' applies only to chi_y", "y");
        s.genus = GenusKind::chi_y_at(y_from_json(j["y"], "y"));
    }

    if (j.contains("bundle")) {
        static const std::set<std::string> twistable = {"signature", "ahat", "todd",
                                                        "chi_y"};
        if (!twistable.count(s.op))
            fail("'bundle' applies only to signature, ahat, todd, chi_y", "bundle");
        s.twist = bundle_from_json(j["bundle"], "bundle");
    }

    if (j.contains("options")) {
        const Json& o = j["options"];
        if (!o.is_object()) fail("'options' must be an object", "options");
        for (const auto& [key, val] : o.items()) {
            if (key == "q_order") s.options.q_order = get_int(val, "options.q_order");
            else if (key == "cover_index")
                s.options.cover_index = get_int(val, "options.cover_index");
            else if (key == "seed") {
                if (!val.is_number_unsigned() && !val.is_number_integer())
                    fail("expected an integer seed", "options.seed");
                s.options.seed = val.get<unsigned long long>();
            } else
                fail("unknown option '" + key + "'", "options");
        }
    }

    if (j.contains("action")) {
        s.action_desc = action_from_json(j["action"], "action");
        static const std::set<std::string> equivariant_ops = {
            "euler", "signature", "ahat",         "todd",
            "chi_y", "loop_signature", "level_n_loop", "level_n_cusp"};
        if (!equivariant_ops.count(s.op))
            fail("operation '" + s.op + "' does not take an action", "action");
        if (s.space_desc.kind != SpaceDesc::Kind::CP)
            fail("linear_cp actions require a cp space", "action");
        int d = default_cover(s.op, s.level);
        if (s.action_desc->d) d = *s.action_desc->d;
        if (s.options.cover_index) d = *s.options.cover_index;
        try {
            s.action = linear_cp_action(s.action_desc->weights, d);
        } catch (const std::domain_error& e) {
            fail(e.what(), "action");
        }
        if (s.action->M.real_dim != s.space.real_dim)
            fail("action weight count does not match the cp space", "action.weights");
        s.action_desc->d = d;  // canonical: the resolved cover index
    }

    for (const auto& item : j.items()) {
        static const std::set<std::string> known = {"space", "action", "genus",  "y",
                                                    "bundle", "level",  "alpha", "beta",
                                                    "options"};
        if (!known.count(item.key()))
            fail("unknown scenario field '" + item.key() + "'", item.key());
    }
    return s;
}

Json scenario_to_json_obj(const Scenario& s) {
    Json j;
    j["space"] = space_to_json(s.space_desc);
    if (s.action_desc) j["action"] = action_to_json(*s.action_desc);
    j["genus"] = s.op;
    if (s.op == "chi_y" && s.genus.y_bound) j["y"] = y_to_json(*s.genus.y_bound);
    if (s.twist) j["bundle"] = bundle_to_json_obj(s.twist);
    if (s.op == "level_n_loop" || s.op == "level_n_cusp" || s.op == "cusp_values")
        j["level"] = s.level;
    if (s.op == "level_n_cusp") {
        j["alpha"] = s.alpha;
        j["beta"] = s.beta;
    }
    Json o;
    o["q_order"] = s.options.q_order;
    if (s.options.cover_index) o["cover_index"] = *s.options.cover_index;
    if (s.options.seed != 1) o["seed"] = s.options.seed;
    j["options"] = std::move(o);
    return j;
}

// ---- report scalar converters ----

Json rational_json(const Rational& q) { return Json(q.str()); }

Json cyc_json(const CycNumber& c) {
    if (const auto q = c.as_rational()) return Json(q->str());
    Json j;
    j["modulus"] = c.modulus();
    Json arr = Json::array();
    for (const auto& q : c.coeffs()) arr.push_back(q.str());
    j["coefficients"] = std::move(arr);
    return j;
}

Json qseries_json(const QSeries<Rational>& s) {
    Json j;
    j["var"] = std::string(1, s.var());
    Json arr = Json::array();
    const int top = s.exact() ? -1 : s.order();
    for (int k = 0; k <= top; ++k) arr.push_back(s.coeff(k).str());
    j["order"] = top;
    j["coefficients"] = std::move(arr);
    return j;
}

Json qseries_cyc_json(const QSeries<CycNumber>& s) {
    Json j;
    j["var"] = std::string(1, s.var());
    Json arr = Json::array();
    const int top = s.exact() ? -1 : s.order();
    for (int k = 0; k <= top; ++k) arr.push_back(cyc_json(s.coeff(k)));
    j["order"] = top;
    j["coefficients"] = std::move(arr);
    return j;
}

Json ypoly_json(const LaurentPoly<Rational>& p) {
    Json j;
    j["var"] = std::string(1, p.var());
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exp"] = e;
        t["coeff"] = c.str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Json index_value_json(const IndexValue& v) {
    return std::visit(
        [](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational>) return rational_json(x);
            else if constexpr (std::is_same_v<T, CycNumber>) return cyc_json(x);
            else if constexpr (std::is_same_v<T, YPoly>) return ypoly_json(x);
            else if constexpr (std::is_same_v<T, QSeries<Rational>>) return qseries_json(x);
            else return qseries_cyc_json(x);
        },
        v);
}

namespace {

template <typename S, typename ScalarToJson>
Json laurent_json(const LaurentPoly<S>& p, ScalarToJson f) {
    Json j;
    if (p.is_zero()) {
        j["min_exp"] = 0;
        j["coefficients"] = Json::array({f(S{})});
        return j;
    }
    const int lo = p.min_exp(), hi = p.max_exp();
    j["min_exp"] = lo;
    Json arr = Json::array();
    for (int e = lo; e <= hi; ++e) {
        auto it = p.terms().find(e);
        arr.push_back(f(it == p.terms().end() ? S{} : it->second));
    }
    j["coefficients"] = std::move(arr);
    return j;
}

template <typename S, typename ScalarToJson>
Json rf_json_generic(const RationalFunction<S>& fct, ScalarToJson f) {
    Json j;
    j["var"] = std::string(1, fct.var());
    j["numerator"] = laurent_json(fct.num(), f);
    j["denominator"] = laurent_json(fct.den(), f);
    return j;
}

}  // namespace

Json rf_json(const RFq& f) {
    return rf_json_generic(f, [](const Rational& q) { return rational_json(q); });
}

Json rfc_json(const RFc& f) {
    return rf_json_generic(f, [](const CycNumber& c) { return cyc_json(c); });
}

Json equiv_value_json(const EquivValue& v) {
    return std::visit(
        [](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, RFq>) return rf_json(x);
            else if constexpr (std::is_same_v<T, RFc>) return rfc_json(x);
            else {
                Json j;
                j["var"] = std::string(1, x.var());
                j["order"] = x.exact() ? -1 : x.order();
                Json arr = Json::array();
                const int top = x.exact() ? -1 : x.order();
                for (int k = 0; k <= top; ++k) {
                    if constexpr (std::is_same_v<T, QSeries<RFq>>)
                        arr.push_back(rf_json(x.coeff(k)));
                    else
                        arr.push_back(rfc_json(x.coeff(k)));
                }
                j["coefficients"] = std::move(arr);
                return j;
            }
        },
        v);
}

}  // namespace detail

// ---- public API ----

SpaceModel resolve_space(const SpaceDesc& d) {
    switch (d.kind) {
        case SpaceDesc::Kind::Point:
            return point();
        case SpaceDesc::Kind::CP:
            if (d.n < 0) throw ScenarioError("cp index must be >= 0", "space.n");
            return cp(d.n);
        case SpaceDesc::Kind::Product: {
            SpaceModel m = resolve_space(d.factors.at(0));
            for (size_t i = 1; i < d.factors.size(); ++i) {
                try {
                    m = product(m, resolve_space(d.factors[i]));
                } catch (const std::domain_error& e) {
                    throw ScenarioError(e.what(),
                                        "space.factors[" + std::to_string(i) + "]");
                }
            }
            return m;
        }
        case SpaceDesc::Kind::Hypersurface:
            if (d.m < 1 || d.d < 1)
                throw ScenarioError("hypersurface needs m >= 1 and degree >= 1", "space");
            return hypersurface(d.m, d.d);
        case SpaceDesc::Kind::EvenSphere:
            if (d.n < 1) throw ScenarioError("even sphere needs n >= 1", "space.n");
            return even_sphere(d.n);
    }
    throw ScenarioError("corrupt space descriptor", "space");
}

Scenario scenario_from_json(const std::string& text) {
    detail::Json j;
    try {
        j = detail::Json::parse(text);
    } catch (const std::exception& e) {
        throw ScenarioError(std::string("JSON parse error: ") + e.what(), "");
    }
    return detail::scenario_from_json_obj(j);
}

std::string scenario_to_json(const Scenario& s) {
    return detail::scenario_to_json_obj(s).dump();
}

std::string space_desc_to_json(const SpaceDesc& d) {
    return detail::space_to_json(d).dump();
}

std::string bundle_to_json(const BundlePtr& e) {
    return detail::bundle_to_json_obj(e).dump();
}

}  // namespace genera
