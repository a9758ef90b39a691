/// @file main.cpp
/// @brief The `genera` command-line tool: exact genus and equivariant-index
/// computations on model manifolds, plus the named verification suites.
///
/// Exit codes: 0 success, 1 check failure, 2 invalid input,
/// 3 precondition violation.

#include <genera/commands.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

/// A scenario argument is inline JSON if it starts with '{', standard input
/// if it is "-", and a file path otherwise.
std::string load_scenario(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return arg;
    std::ostringstream ss;
    if (arg == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw genera::ScenarioError("cannot open scenario file '" + arg + "'", "");
    ss << in.rdbuf();
    return ss.str();
}

int emit(const genera::CommandReport& r, const std::string& format) {
    if (!r.error.empty()) {
        std::cerr << r.error << "\n";
        return r.exit_code;
    }
    std::cout << (format == "csv" ? r.csv : r.json);
    return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "genera: exact classical and elliptic genera of model manifolds,\n"
        "equivariant indices of circle actions via localization, and\n"
        "mechanical rigidity/vanishing verification"};
    app.require_subcommand(1);

    std::string format = "json";
    const auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
    };

    std::string scenario_arg;
    int q_order = 4;
    unsigned long long seed = 1;
    std::string suite;

    CLI::App* genus = app.add_subcommand(
        "genus", "evaluate a plain scenario (genus, twisted index, q-expansion)");
    genus->add_option("scenario", scenario_arg,
                      "scenario: file path, inline JSON, or '-' for stdin")
        ->required();
    CLI::Option* gq = genus->add_option("--q-order", q_order,
                                        "q-series truncation order (default 4)");
    add_format(genus);

    CLI::App* equiv = app.add_subcommand(
        "equivariant", "evaluate an equivariant scenario and its rigidity verdict");
    equiv->add_option("scenario", scenario_arg,
                      "scenario: file path, inline JSON, or '-' for stdin")
        ->required();
    CLI::Option* eq = equiv->add_option("--q-order", q_order,
                                        "q-series truncation order (default 4)");
    add_format(equiv);

    CLI::App* verify =
        app.add_subcommand("verify", "run a named verification suite");
    verify
        ->add_option("suite,--suite", suite,
                     "suite: classical, localization, rigidity, vanishing, structure")
        ->required();
    verify->add_option("--seed", seed, "seed for randomized checks")
        ->capture_default_str();
    verify->add_option("--q-order", q_order, "q-series truncation order")
        ->capture_default_str();
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the diagnostic to stderr
        return 2;
    }

    try {
        if (genus->parsed()) {
            genera::CommandOverrides ov;
            if (gq->count()) ov.q_order = q_order;
            return emit(genera::cmd_genus(load_scenario(scenario_arg), ov), format);
        }
        if (equiv->parsed()) {
            genera::CommandOverrides ov;
            if (eq->count()) ov.q_order = q_order;
            return emit(genera::cmd_equivariant(load_scenario(scenario_arg), ov),
                        format);
        }
        return emit(genera::cmd_verify(suite, seed, q_order), format);
    } catch (const genera::ScenarioError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
}
