#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <genera/commands.hpp>

#include <json.hpp>

#include <algorithm>

using namespace genera;
using Json = nlohmann::ordered_json;

TEST_CASE("scenario round-trip is canonical and resolves eagerly") {
    const std::string text = R"({
        "space": {"type": "cp", "n": 2},
        "action": {"type": "linear_cp", "weights": [0, 1, 2]},
        "genus": "signature",
        "options": {"q_order": 4}
    })";
    const Scenario s = scenario_from_json(text);
    REQUIRE(s.action.has_value());
    CHECK(s.action->components.size() == 3);
    CHECK(s.space.real_dim == 4);

    const std::string canon = scenario_to_json(s);
    CHECK(canon ==
          R"({"space":{"type":"cp","n":2},"action":{"type":"linear_cp","weights":[0,1,2],"d":1},"genus":"signature","options":{"q_order":4}})");
    // Parsing the canonical form reproduces it byte for byte.
    CHECK(scenario_to_json(scenario_from_json(canon)) == canon);
}

TEST_CASE("scenario grammar covers spaces, bundles, levels, and y values") {
    // Bundle expressions round-trip structurally.
    const Scenario s = scenario_from_json(R"({
        "space": {"type": "hypersurface", "m": 2, "d": 4},
        "genus": "todd",
        "bundle": {"tensor": [{"extpower": [2, "T_C"]}, {"kroot": [2, 1]}]}
    })");
    CHECK(s.op == "todd");
    REQUIRE(s.twist != nullptr);
    const std::string canon = scenario_to_json(s);
    CHECK(scenario_to_json(scenario_from_json(canon)) == canon);

    // Product spaces and bound chi_y values.
    const Scenario p = scenario_from_json(R"({
        "space": {"type": "product",
                  "factors": [{"type": "cp", "n": 1}, {"type": "cp", "n": 2}]},
        "genus": "chi_y",
        "y": {"minus_zeta_pow": [3, 1]}
    })");
    CHECK(p.space.real_dim == 6);
    CHECK(p.genus.y_bound.has_value());
    const std::string pc = scenario_to_json(p);
    CHECK(scenario_to_json(scenario_from_json(pc)) == pc);

    // Cusp operations carry level and cusp indices.
    const Scenario c = scenario_from_json(R"({
        "space": {"type": "cp", "n": 5},
        "genus": "level_n_cusp", "level": 3, "alpha": 1, "beta": 0
    })");
    CHECK(c.level == 3);
    CHECK(c.alpha == 1);
    CHECK(c.beta == 0);
    const std::string cc = scenario_to_json(c);
    CHECK(scenario_to_json(scenario_from_json(cc)) == cc);
}

TEST_CASE("scenario errors carry the JSON path of the offending field") {
    const auto path_of = [](const std::string& text) -> std::string {
        try {
            scenario_from_json(text);
        } catch (const ScenarioError& e) {
            return e.path();
        }
        return "(accepted)";
    };
    // A missing field names the key in the message, anchored at the container.
    try {
        scenario_from_json(R"({"genus": "todd"})");
        CHECK(false);
    } catch (const ScenarioError& e) {
        CHECK(std::string(e.what()).find("missing field 'space'") != std::string::npos);
    }
    CHECK(path_of(R"({"space": {"type": "cp"}, "genus": "todd"})") == "space");
    CHECK(path_of(R"({"space": {"type": "cp", "n": 2}, "genus": "nope"})") == "genus");
    CHECK(path_of(R"({"space": {"type": "cp", "n": 2}, "genus": "todd", "extra": 1})") ==
          "extra");
    CHECK(path_of(
              R"({"space": {"type": "cp", "n": 2}, "genus": "todd", "y": 3})") == "y");
    CHECK(path_of(
              R"({"space": {"type": "cp", "n": 1}, "action": {"type": "linear_cp", "weights": [0, 1, 2]}, "genus": "todd"})") ==
          "action.weights");
    CHECK(path_of(
              R"({"space": {"type": "cp", "n": 2}, "genus": "todd", "bundle": {"kroot": [2]}})") ==
          "bundle.kroot");
    CHECK(path_of(
              R"({"space": {"type": "cp", "n": 2}, "genus": "dirac_cusp", "action": {"type": "linear_cp", "weights": [0, 1, 2]}})") ==
          "action");
    // Malformed JSON is wrapped, not propagated raw.
    CHECK_THROWS_AS(scenario_from_json("{nope"), ScenarioError);
}

TEST_CASE("cmd_genus evaluates the contract examples") {
    {
        const CommandReport r =
            cmd_genus(R"({"space":{"type":"cp","n":2},"genus":"signature"})");
        CHECK(r.exit_code == 0);
        const Json rep = Json::parse(r.json);
        CHECK(rep.at("command") == "genus");
        CHECK(rep.at("result") == "1");
    }
    {
        const CommandReport r =
            cmd_genus(R"({"space":{"type":"hypersurface","m":2,"d":4},"genus":"ahat"})");
        CHECK(r.exit_code == 0);
        CHECK(Json::parse(r.json).at("result") == "2");
    }
    {
        const CommandReport r =
            cmd_genus(R"({"space":{"type":"cp","n":2},"genus":"dirac_cusp"})");
        CHECK(r.exit_code == 3);
        CHECK(r.error == "spin condition failed: c1 = 3x");
        CHECK(r.json.empty());
    }
    {
        const CommandReport r = cmd_genus("{nope");
        CHECK(r.exit_code == 2);
    }
    {
        // Scenario with an action belongs to the equivariant command.
        const CommandReport r = cmd_genus(
            R"({"space":{"type":"cp","n":1},"action":{"type":"linear_cp","weights":[0,1]},"genus":"todd"})");
        CHECK(r.exit_code == 2);
    }
    {
        // Series results carry the window and exact string coefficients.
        const CommandReport r = cmd_genus(
            R"({"space":{"type":"hypersurface","m":2,"d":4},"genus":"loop_signature","options":{"q_order":3}})");
        CHECK(r.exit_code == 0);
        const Json rep = Json::parse(r.json);
        CHECK(rep.at("result").at("order") == 3);
        CHECK(rep.at("result").at("coefficients") ==
              Json::array({"-16", "-512", "-4096", "-22528"}));
    }
}

TEST_CASE("cmd_equivariant reports character and verdict") {
    {
        const CommandReport r = cmd_equivariant(
            R"({"space":{"type":"cp","n":1},"action":{"type":"linear_cp","weights":[0,1]},"genus":"chi_y"})");
        CHECK(r.exit_code == 0);
        const Json rep = Json::parse(r.json);
        CHECK(rep.at("verdict") == "constant");
        CHECK(rep.at("agrees") == true);
        // The constant is the polynomial 1 - y.
        CHECK(rep.at("value").at("terms") ==
              Json::parse(R"([{"exp":0,"coeff":"1"},{"exp":1,"coeff":"-1"}])"));
    }
    {
        const CommandReport r = cmd_equivariant(
            R"({"space":{"type":"cp","n":3},"action":{"type":"linear_cp","weights":[0,1,2,3]},"genus":"loop_signature","options":{"q_order":3}})");
        CHECK(r.exit_code == 0);
        const Json rep = Json::parse(r.json);
        CHECK(rep.at("verdict") == "constant");
        CHECK(rep.at("character").at("coefficients").size() == 4);
        CHECK(rep.at("agrees") == true);
    }
    {
        const CommandReport r = cmd_equivariant(
            R"({"space":{"type":"cp","n":2},"action":{"type":"linear_cp","weights":[0,1,2]},"genus":"signature","bundle":"T_C"})");
        CHECK(r.exit_code == 0);
        const Json rep = Json::parse(r.json);
        CHECK(rep.at("verdict") == "non-constant");
        CHECK(rep.at("value").is_null());
        // The character itself is printed: a genuine rational function in u.
        CHECK(rep.at("character").contains("numerator"));
        CHECK(rep.at("character").contains("denominator"));
    }
    {
        // Scenario without an action belongs to the genus command.
        const CommandReport r =
            cmd_equivariant(R"({"space":{"type":"cp","n":2},"genus":"signature"})");
        CHECK(r.exit_code == 2);
    }
}

TEST_CASE("replaying a report's scenario echo is bit-exact") {
    const std::string witness =
        R"({"space":{"type":"cp","n":2},"action":{"type":"linear_cp","weights":[0,1,2]},"genus":"signature","bundle":"T_C"})";
    const CommandReport a = cmd_equivariant(witness);
    const CommandReport b = cmd_equivariant(witness);
    CHECK(a.json == b.json);
    CHECK(a.csv == b.csv);

    // Re-running the canonical scenario echoed in the report reproduces the
    // report byte for byte.
    const Json rep = Json::parse(a.json);
    const CommandReport c = cmd_equivariant(rep.at("scenario").dump());
    CHECK(c.json == a.json);
}

TEST_CASE("cmd_verify emits per-check rows and a pass verdict") {
    const CommandReport r = cmd_verify("structure", 1, 4);
    CHECK(r.exit_code == 0);
    const Json rep = Json::parse(r.json);
    CHECK(rep.at("command") == "verify");
    CHECK(rep.at("suite") == "structure");
    CHECK(rep.at("pass") == true);
    REQUIRE(rep.at("checks").is_array());
    for (const auto& c : rep.at("checks")) {
        CHECK(c.contains("id"));
        CHECK(c.contains("pass"));
        CHECK(c.contains("applicable"));
        CHECK(c.contains("micros"));
    }
    // CSV: header plus one row per check.
    const size_t rows = std::count(r.csv.begin(), r.csv.end(), '\n');
    CHECK(rows == rep.at("checks").size() + 1);

    CHECK(cmd_verify("nope", 1, 4).exit_code == 2);
}

TEST_CASE("seeded pools are a pure function of the seed") {
    CHECK(random_weight_pool(7, 25) == random_weight_pool(7, 25));
    CHECK(random_weight_pool(7, 25) != random_weight_pool(8, 25));
    for (const auto& w : random_weight_pool(3, 40)) {
        CHECK(w.size() >= 2);
        CHECK(w.size() <= 6);
        bool all_equal = true;
        for (const long x : w) all_equal = all_equal && x == w[0];
        CHECK(!all_equal);
    }
}
