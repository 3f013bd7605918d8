#include "aggmdp/mdp.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <utility>

#include "aggmdp/errors.hpp"
#include "text.hpp"

namespace aggmdp {

using detail::strf;

std::vector<std::string> validation_errors(const DiscountedMDP& mdp) {
    std::vector<std::string> issues;
    const int n = mdp.num_states();
    if (n <= 0) {
        issues.push_back("model has no states");
    }
    if (!(mdp.discount > 0.0) || !(mdp.discount < 1.0)) {
        issues.push_back(strf("discount %g is not strictly inside (0, 1)", mdp.discount));
    }
    for (int i = 0; i < n; ++i) {
        const auto& actions = mdp.states[static_cast<std::size_t>(i)];
        if (actions.empty()) {
            issues.push_back(strf("state %d has an empty action set", i + 1));
        }
        for (std::size_t u = 0; u < actions.size(); ++u) {
            const auto& action = actions[u];
            double row_sum = 0.0;
            for (const Transition& t : action.transitions) {
                if (t.successor < 0 || t.successor >= n) {
                    issues.push_back(strf("state %d action '%s': successor %d out of range 1..%d",
                                          i + 1, action.label.c_str(), t.successor + 1, n));
                }
                if (!(t.probability >= 0.0)) {
                    issues.push_back(strf("state %d action '%s': negative probability %g", i + 1,
                                          action.label.c_str(), t.probability));
                }
                if (!std::isfinite(t.cost)) {
                    issues.push_back(
                        strf("state %d action '%s': cost is not finite", i + 1, action.label.c_str()));
                }
                row_sum += t.probability;
            }
            if (std::abs(row_sum - 1.0) > 1e-9) {
                issues.push_back(strf("state %d action '%s': probabilities sum to %.12g, not 1",
                                      i + 1, action.label.c_str(), row_sum));
            }
        }
    }
    return issues;
}

void validate(const DiscountedMDP& mdp) {
    auto issues = validation_errors(mdp);
    if (!issues.empty()) {
        throw ValidationError("invalid MDP", issues);
    }
}

double sup_norm_diff(const ValueVector& a, const ValueVector& b) {
    if (a.size() != b.size()) {
        throw DimensionError("vector", a.size(), b.size());
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

double q_value(const DiscountedMDP& mdp, int state, int action, const ValueVector& values) {
    double q = 0.0;
    for (const Transition& t :
         mdp.states[static_cast<std::size_t>(state)][static_cast<std::size_t>(action)].transitions) {
        q += t.probability * (t.cost + mdp.discount * values[static_cast<std::size_t>(t.successor)]);
    }
    return q;
}

ValueVector bellman_operator(const DiscountedMDP& mdp, const ValueVector& values) {
    const std::size_t n = static_cast<std::size_t>(mdp.num_states());
    if (values.size() != n) {
        throw DimensionError("value vector", n, values.size());
    }
    ValueVector backed_up(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (mdp.states[i].empty()) {
            throw ValidationError(strf("state %zu has an empty action set", i + 1));
        }
        double best = q_value(mdp, static_cast<int>(i), 0, values);
        const int num_actions = static_cast<int>(mdp.states[i].size());
        for (int u = 1; u < num_actions; ++u) {
            best = std::min(best, q_value(mdp, static_cast<int>(i), u, values));
        }
        backed_up[i] = best;
    }
    return backed_up;
}

Policy greedy_policy(const DiscountedMDP& mdp, const ValueVector& values) {
    const std::size_t n = static_cast<std::size_t>(mdp.num_states());
    if (values.size() != n) {
        throw DimensionError("value vector", n, values.size());
    }
    Policy policy(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (mdp.states[i].empty()) {
            throw ValidationError(strf("state %zu has an empty action set", i + 1));
        }
        double best = q_value(mdp, static_cast<int>(i), 0, values);
        const int num_actions = static_cast<int>(mdp.states[i].size());
        for (int u = 1; u < num_actions; ++u) {
            const double q = q_value(mdp, static_cast<int>(i), u, values);
            if (q < best) {
                best = q;
                policy[i] = u;
            }
        }
    }
    return policy;
}

SolveReport value_iteration(const DiscountedMDP& mdp, const ValueVector& initial, double tol,
                            long max_iterations) {
    if (!(tol > 0.0)) {
        throw ValidationError("tolerance must be positive");
    }
    validate(mdp);
    const std::size_t n = static_cast<std::size_t>(mdp.num_states());
    if (initial.size() != n) {
        throw DimensionError("initial value vector", n, initial.size());
    }

    // A successive gap of tol (1 - alpha) / (2 alpha) bounds the true
    // sup-norm error by tol / 2.
    const double alpha = mdp.discount;
    const double gap_target = tol * (1.0 - alpha) / (2.0 * alpha);

    ValueVector current = initial;
    double gap = 0.0;
    for (long k = 1; k <= max_iterations; ++k) {
        ValueVector next = bellman_operator(mdp, current);
        gap = sup_norm_diff(next, current);
        current = std::move(next);
        if (gap <= gap_target) {
            SolveReport report;
            report.iterations = k;
            report.sup_norm_residual = sup_norm_diff(bellman_operator(mdp, current), current);
            report.policy = greedy_policy(mdp, current);
            report.value = std::move(current);
            return report;
        }
    }
    throw ConvergenceError("value_iteration", max_iterations, gap);
}

ValueVector policy_evaluation(const DiscountedMDP& mdp, const Policy& policy) {
    validate(mdp);
    const int n = mdp.num_states();
    if (policy.size() != static_cast<std::size_t>(n)) {
        throw DimensionError("policy", static_cast<std::size_t>(n), policy.size());
    }
    for (int i = 0; i < n; ++i) {
        const int u = policy[static_cast<std::size_t>(i)];
        if (u < 0 || u >= static_cast<int>(mdp.states[static_cast<std::size_t>(i)].size())) {
            throw ValidationError(strf("policy picks action %d at state %d, which has %zu actions",
                                       u, i + 1, mdp.states[static_cast<std::size_t>(i)].size()));
        }
    }

    Eigen::MatrixXd system = Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd stage_cost = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) {
        const auto& action =
            mdp.states[static_cast<std::size_t>(i)][static_cast<std::size_t>(policy[static_cast<std::size_t>(i)])];
        for (const Transition& t : action.transitions) {
            system(i, t.successor) -= mdp.discount * t.probability;
            stage_cost(i) += t.probability * t.cost;
        }
    }

    const Eigen::VectorXd solution = system.partialPivLu().solve(stage_cost);
    const double residual = (system * solution - stage_cost).lpNorm<Eigen::Infinity>();
    if (!(residual <= 1e-10)) {
        throw std::runtime_error(
            strf("policy evaluation: linear system residual %g exceeds 1e-10", residual));
    }

    return ValueVector(solution.data(), solution.data() + n);
}

}  // namespace aggmdp
