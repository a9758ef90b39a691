/// @file json_io.hpp
/// @brief Scenario descriptors: JSON parsing, resolution to engine objects,
/// and canonical re-serialization.
///
/// A scenario bundles a space descriptor, an optional circle-action
/// descriptor, an operation selector (a genus name or a loop/cusp
/// operation), an optional twisting bundle, and options.  Parsing resolves
/// the descriptors to engine objects eagerly, so a scenario that parses is
/// ready to run; failures carry the JSON path of the offending field.

#pragma once

#include <genera/equivariant.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace genera {

/// Scenario parse/validation failure, annotated with the JSON path of the
/// offending field (e.g. "space.n" or "bundle.tensor[1]").
class ScenarioError : public std::runtime_error {
public:
    ScenarioError(const std::string& msg, std::string path)
        : std::runtime_error(path.empty() ? msg : msg + " (at " + path + ")"),
          path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

/// Declarative space description, kept alongside the resolved model so that
/// scenarios round-trip through serialization.
struct SpaceDesc {
    enum class Kind { Point, CP, Product, Hypersurface, EvenSphere };
    Kind kind = Kind::CP;
    int n = 1;  // CP index / half-dimension of the even sphere
    int m = 0;  // hypersurface complex dimension
    int d = 0;  // hypersurface degree
    std::vector<SpaceDesc> factors;  // product
};

SpaceModel resolve_space(const SpaceDesc& d);

struct ActionDesc {
    std::vector<long> weights;
    std::optional<int> d;  // cover index; defaulted from the operation if absent
};

struct ScenarioOptions {
    int q_order = 4;
    std::optional<int> cover_index;  // overrides the action's cover index
    unsigned long long seed = 1;
};

/// A parsed scenario: raw descriptors plus resolved engine objects.
struct Scenario {
    SpaceDesc space_desc;
    SpaceModel space;
    std::optional<ActionDesc> action_desc;
    std::optional<CircleAction> action;

    /// One of: euler, signature, ahat, todd, chi_y, loop_signature,
    /// dirac_cusp, level_n_loop, level_n_cusp, cusp_values.
    std::string op = "signature";
    GenusKind genus = GenusKind::signature();
    BundlePtr twist;  // null when untwisted
    int level = 2;    // level_n operations
    int alpha = 0;    // level_n_cusp
    int beta = 1;     // level_n_cusp

    ScenarioOptions options;
};

/// Parses a scenario from JSON text and resolves it.  Throws ScenarioError
/// with a position-annotated message on malformed or invalid input.
Scenario scenario_from_json(const std::string& text);

/// Canonical serialization; parsing the output reproduces the scenario.
std::string scenario_to_json(const Scenario& s);

/// Serializers reused by reports and diagnostics.
std::string space_desc_to_json(const SpaceDesc& d);
std::string bundle_to_json(const BundlePtr& e);

}  // namespace genera
