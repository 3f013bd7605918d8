#pragma once

#include "aggmdp/aggregation.hpp"
#include "aggmdp/mdp.hpp"

namespace aggmdp {

/// Maximal spread of the optimal cost inside any footprint:
/// max_x max_{i,j : phi_ix > 0, phi_jx > 0} |J*(i) - J*(j)|, computed per
/// footprint as (max - min). Empty footprints contribute nothing. Depends
/// only on the Phi supports, not on the weight values.
double epsilon_of(const AggregationArchitecture& arch, const ValueVector& j_star);

struct BoundAudit {
    bool condition_holds = false;
    double epsilon = 0.0;
    double bound = 0.0;        // epsilon / (1 - alpha)
    double actual_error = 0.0; // max_i |J*(i) - J~(i)|
    bool bound_satisfied = false;
    ValueVector per_state_errors;
    int worst_state = 0;       // 0-based argmax of per_state_errors
    ValueVector j_star;
    ValueVector j_tilde;
};

/// Absolute slack on the verdict, absorbing the two solver tolerances.
inline constexpr double kAuditSlack = 1e-8;

/// Solves the original and aggregate problems at `tol`, computes the spread
/// epsilon and the bound epsilon / (1 - alpha), and compares against the
/// observed error. A violated bound is a reported outcome, not an error.
BoundAudit audit(const DiscountedMDP& mdp, const AggregationArchitecture& arch, double tol = 1e-10);

}  // namespace aggmdp
