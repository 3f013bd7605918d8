#pragma once

#include <string>
#include <vector>

namespace aggmdp {

using ValueVector = std::vector<double>;

/// Per-state index into that state's action list.
using Policy = std::vector<int>;

struct Transition {
    int successor = 0;
    double probability = 0.0;
    double cost = 0.0;
};

struct ActionModel {
    std::string label;
    std::vector<Transition> transitions;
};

/// Discounted finite-state MDP with per-state finite action sets and sparse
/// transition rows. States are 0-based in memory; the JSON format is 1-based.
struct DiscountedMDP {
    double discount = 0.0;
    std::vector<std::vector<ActionModel>> states;  // states[i] = U(i)

    int num_states() const { return static_cast<int>(states.size()); }
};

/// Every structural violation (row sums, ranges, finiteness); empty when valid.
/// Rows that do not sum to 1 are reported, never renormalized.
std::vector<std::string> validation_errors(const DiscountedMDP& mdp);

/// Throws ValidationError listing all violations.
void validate(const DiscountedMDP& mdp);

struct SolveReport {
    ValueVector value;
    Policy policy;
    long iterations = 0;
    double sup_norm_residual = 0.0;
};

double sup_norm_diff(const ValueVector& a, const ValueVector& b);

/// Expected one-step cost plus discounted continuation for one (state, action).
double q_value(const DiscountedMDP& mdp, int state, int action, const ValueVector& values);

/// One exact backup: (TJ)(i) = min_u sum_j p_ij(u) (g(i,u,j) + alpha J(j)).
ValueVector bellman_operator(const DiscountedMDP& mdp, const ValueVector& values);

/// Action attaining the backup minimum at each state; ties go to the lowest
/// action index.
Policy greedy_policy(const DiscountedMDP& mdp, const ValueVector& values);

/// Successive approximation from `initial`. Stops once the successive gap
/// guarantees the result is within `tol` of the fixed point in sup-norm;
/// the reported residual is ||TJ - J||_inf at the returned value.
SolveReport value_iteration(const DiscountedMDP& mdp, const ValueVector& initial, double tol,
                            long max_iterations = 1'000'000);

/// Exact cost of a stationary policy via the linear system (I - alpha P) J = g.
ValueVector policy_evaluation(const DiscountedMDP& mdp, const Policy& policy);

}  // namespace aggmdp
