/// @file commands.cpp
/// @brief Report assembly for the CLI commands.

#include <genera/commands.hpp>

#include "json_detail.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace genera {

namespace {

using detail::Json;

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

/// One CSV cell for a report value: strings verbatim, structures as JSON.
std::string cell(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
    return j.dump();
}

std::string kv_csv(const std::vector<std::pair<std::string, Json>>& rows) {
    std::ostringstream os;
    os << "key,value\n";
    for (const auto& [k, v] : rows)
        os << csv_quote(k) << "," << csv_quote(cell(v)) << "\n";
    return os.str();
}

/// Appends per-coefficient rows for a series result, one per q-power.
void series_rows(std::vector<std::pair<std::string, Json>>& rows, const Json& series) {
    const auto& coeffs = series.at("coefficients");
    for (size_t k = 0; k < coeffs.size(); ++k)
        rows.emplace_back("q^" + std::to_string(k), coeffs[k]);
}

template <typename F>
CommandReport guarded(F body) {
    try {
        return body();
    } catch (const ScenarioError& e) {
        CommandReport r;
        r.exit_code = 2;
        r.error = e.what();
        return r;
    } catch (const std::invalid_argument& e) {
        CommandReport r;
        r.exit_code = 2;
        r.error = e.what();
        return r;
    } catch (const std::exception& e) {  // domain_error and unexpected failures
        CommandReport r;
        r.exit_code = 3;
        r.error = e.what();
        return r;
    }
}

void apply(Scenario& s, const CommandOverrides& ov) {
    if (ov.q_order) s.options.q_order = *ov.q_order;
    if (ov.seed) s.options.seed = *ov.seed;
}

}  // namespace

CommandReport cmd_genus(const std::string& scenario_text, const CommandOverrides& ov) {
    return guarded([&]() {
        Scenario s = scenario_from_json(scenario_text);
        if (s.action)
            throw ScenarioError("scenario has an action; use the equivariant command",
                                "action");
        apply(s, ov);
        const int Q = s.options.q_order;

        Json result;
        if (s.op == "loop_signature") {
            result = detail::qseries_json(loop_signature(s.space, Q));
        } else if (s.op == "dirac_cusp") {
            result = detail::qseries_json(dirac_cusp_series(s.space, Q));
        } else if (s.op == "level_n_loop") {
            result = detail::qseries_cyc_json(levelN_loop(s.space, s.level, Q));
        } else if (s.op == "level_n_cusp") {
            result = detail::qseries_cyc_json(
                alpha_cusp_series(s.space, s.level, s.alpha, s.beta, Q));
        } else if (s.op == "cusp_values") {
            const CuspValues cv = cusp_values(s.space, s.level);
            Json j;
            j["N"] = cv.N;
            Json kr = Json::array();
            for (const auto& c : cv.kroot_values) kr.push_back(detail::cyc_json(c));
            Json cy = Json::array();
            for (const auto& c : cv.chi_y_values) cy.push_back(detail::cyc_json(c));
            j["kroot_values"] = std::move(kr);
            j["chi_y_values"] = std::move(cy);
            result = std::move(j);
        } else {
            const IndexValue v = s.twist ? twisted_index(s.space, s.genus, s.twist)
                                         : index(s.space, s.genus);
            result = detail::index_value_json(v);
        }

        Json rep;
        rep["command"] = "genus";
        rep["scenario"] = detail::scenario_to_json_obj(s);
        rep["result"] = result;

        std::vector<std::pair<std::string, Json>> rows;
        rows.emplace_back("command", "genus");
        rows.emplace_back("op", s.op);
        rows.emplace_back("space", s.space.name);
        if (result.is_object() && result.contains("coefficients") &&
            result.contains("order")) {
            rows.emplace_back("order", result.at("order"));
            series_rows(rows, result);
        } else if (result.is_object() && result.contains("kroot_values")) {
            const auto& kr = result.at("kroot_values");
            const auto& cy = result.at("chi_y_values");
            for (size_t a = 0; a < kr.size(); ++a)
                rows.emplace_back("kroot[" + std::to_string(a + 1) + "]", kr[a]);
            for (size_t b = 0; b < cy.size(); ++b)
                rows.emplace_back("chi_y[" + std::to_string(b + 1) + "]", cy[b]);
        } else {
            rows.emplace_back("result", result);
        }

        CommandReport out;
        out.json = rep.dump(2) + "\n";
        out.csv = kv_csv(rows);
        return out;
    });
}

CommandReport cmd_equivariant(const std::string& scenario_text,
                              const CommandOverrides& ov) {
    return guarded([&]() {
        Scenario s = scenario_from_json(scenario_text);
        if (!s.action)
            throw ScenarioError("scenario has no action; use the genus command",
                                "action");
        apply(s, ov);
        const int Q = s.options.q_order;

        const EquivSpec spec = [&]() {
            if (s.op == "loop_signature") return EquivSpec::level2_loop(Q);
            if (s.op == "level_n_loop")
                return EquivSpec::levelN_loop_at_cusp_infinity(s.level, Q);
            if (s.op == "level_n_cusp")
                return EquivSpec::levelN_cusp(s.level, s.alpha, s.beta, Q);
            return s.twist ? EquivSpec::twisted(s.genus, s.twist)
                           : EquivSpec::plain(s.genus);
        }();

        const EquivValue chr = equiv_index(*s.action, spec);
        const RigidityReport R = rigidity_report(*s.action, spec);
        const std::string verdict = R.constant      ? "constant"
                                    : R.normalized  ? "constant-up-to-monomial"
                                                    : "non-constant";

        Json rep;
        rep["command"] = "equivariant";
        rep["scenario"] = detail::scenario_to_json_obj(s);
        rep["character"] = detail::equiv_value_json(chr);
        rep["verdict"] = verdict;
        rep["constant"] = R.constant;
        rep["normalized"] = R.normalized;
        rep["monomial_exp"] = R.monomial_exp;
        if (R.constant || R.normalized) {
            rep["value"] = detail::index_value_json(R.value);
        } else {
            rep["value"] = nullptr;
        }
        rep["nonequivariant"] = detail::index_value_json(R.nonequivariant);
        rep["agrees"] = R.agrees;
        rep["detail"] = R.detail;

        std::vector<std::pair<std::string, Json>> rows;
        rows.emplace_back("command", "equivariant");
        rows.emplace_back("op", s.op);
        rows.emplace_back("space", s.space.name);
        rows.emplace_back("verdict", verdict);
        rows.emplace_back("monomial_exp", R.monomial_exp);
        rows.emplace_back("value", rep.at("value"));
        rows.emplace_back("nonequivariant", rep.at("nonequivariant"));
        rows.emplace_back("agrees", R.agrees);
        rows.emplace_back("detail", R.detail);

        CommandReport out;
        out.json = rep.dump(2) + "\n";
        out.csv = kv_csv(rows);
        return out;
    });
}

CommandReport cmd_verify(const std::string& suite, unsigned long long seed,
                         int q_order) {
    return guarded([&]() {
        const SuiteReport rep = run_suite(suite, seed, q_order);

        Json j;
        j["command"] = "verify";
        j["suite"] = rep.suite;
        j["seed"] = rep.seed;
        j["q_order"] = rep.q_order;
        Json checks = Json::array();
        for (const auto& c : rep.checks) {
            Json cj;
            cj["id"] = c.id;
            cj["pass"] = c.pass;
            cj["applicable"] = c.applicable;
            cj["micros"] = c.micros;
            if (!c.detail.empty()) cj["detail"] = c.detail;
            if (!c.counterexample.empty())
                cj["counterexample"] = Json::parse(c.counterexample);
            checks.push_back(std::move(cj));
        }
        j["checks"] = std::move(checks);
        j["pass"] = rep.pass;

        std::ostringstream csv;
        csv << "id,pass,applicable,micros,detail\n";
        for (const auto& c : rep.checks)
            csv << csv_quote(c.id) << "," << (c.pass ? "true" : "false") << ","
                << (c.applicable ? "true" : "false") << "," << c.micros << ","
                << csv_quote(c.detail) << "\n";

        CommandReport out;
        out.exit_code = rep.pass ? 0 : 1;
        out.json = j.dump(2) + "\n";
        out.csv = csv.str();
        return out;
    });
}

}  // namespace genera
