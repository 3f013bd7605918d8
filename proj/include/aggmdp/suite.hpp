#pragma once

#include <cstdint>
#include <vector>

namespace aggmdp {

struct SuiteParams {
    int count = 200;
    std::uint64_t seed = 0;
    int max_n = 20;
    double tol = 1e-10;
    /// When set, instances are drawn without enforcing the disaggregation
    /// support condition; condition violators are counted separately and do
    /// not fail the run.
    bool allow_violations = false;
};

struct SuiteInstanceResult {
    int index = 0;
    std::uint64_t seed = 0;
    bool condition_holds = false;
    double epsilon = 0.0;
    double bound = 0.0;
    double actual_error = 0.0;
    bool bound_satisfied = false;
};

struct SuiteSummary {
    int count = 0;
    int passed = 0;                // condition-holding instances satisfying the bound
    int condition_violations = 0;  // instances where the support condition failed
    double max_ratio = 0.0;        // max actual_error / bound over bound > 0 cases
    std::vector<SuiteInstanceResult> violations;  // condition-holding instances breaking the bound
};

/// Randomized universal check of the error bound: audits `count` seeded
/// (model, architecture) pairs with n <= max_n and up to 3 actions per state.
SuiteSummary run_bound_suite(const SuiteParams& params);

}  // namespace aggmdp
