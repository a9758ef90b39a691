/// @file verify.hpp
/// @brief Named verification suites over the acceptance criteria: classical
/// genus tables, localization consistency over seeded random actions,
/// rigidity and non-rigidity, vanishing theorems, and structure facts.
///
/// Every check is exact (tolerance zero).  Randomized checks derive all
/// choices from an explicit seed, so a report is a pure function of
/// (suite, seed, q-order); failing checks carry a serialized scenario that
/// replays the computation bit-exactly.

#pragma once

#include <genera/json_io.hpp>

#include <string>
#include <vector>

namespace genera {

struct CheckResult {
    std::string id;
    bool pass = false;
    bool applicable = true;  // inapplicable checks do not fail a suite
    std::string detail;      // the violated identity when failing
    long long micros = 0;
    std::string counterexample;  // replay scenario JSON, set on failure
};

struct SuiteReport {
    std::string suite;
    unsigned long long seed = 1;
    int q_order = 4;
    std::vector<CheckResult> checks;
    bool pass = true;
};

/// The named suites: classical, localization, rigidity, vanishing, structure.
const std::vector<std::string>& suite_names();

/// Runs one acceptance criterion (1..11) and returns its checks in a
/// deterministic order.  Criteria over random actions draw them from `seed`.
std::vector<CheckResult> run_criterion(int k, unsigned long long seed, int q_order);

/// Runs a named suite (a fixed set of criteria).  Throws std::invalid_argument
/// for an unknown suite name.
SuiteReport run_suite(const std::string& name, unsigned long long seed, int q_order);

/// The seeded random weight vectors used by the action-pool criteria:
/// `count` vectors for cp(n) with n <= 5, entries in [-5, 5], never all equal.
std::vector<std::vector<long>> random_weight_pool(unsigned long long seed, int count);

}  // namespace genera
