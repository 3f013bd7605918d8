#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "aggmdp/aggregation.hpp"
#include "aggmdp/mdp.hpp"

namespace aggmdp {

struct AggregateSolution {
    std::vector<double> r_star;  // optimal cost per aggregate state
    ValueVector j0;              // backup of j1 through the original dynamics
    ValueVector j1;              // Phi * r_star
    ValueVector j_tilde;         // interpolated approximation; equals j1 by construction
    long iterations = 0;
    double residual = 0.0;       // ||H r - r||_inf at r_star
};

/// Interpolated approximation: J~(j) = sum_y phi_jy r_y.
ValueVector interpolate(const AggregationArchitecture& arch, const std::vector<double>& r);

/// Composite aggregate operator:
/// (Hr)(x) = sum_i d_xi min_u sum_j p_ij(u) (g(i,u,j) + alpha sum_y phi_jy r_y).
std::vector<double> apply_H(const DiscountedMDP& mdp, const AggregationArchitecture& arch,
                            const std::vector<double>& r);

/// Successive approximation on H, from zero unless `start` is given. Stops
/// once the successive gap guarantees the result is within `tol` of the
/// fixed point in sup-norm, then derives j1 = Phi r, j0 = backup of j1.
AggregateSolution solve_r_star(const DiscountedMDP& mdp, const AggregationArchitecture& arch,
                               double tol, long max_iterations = 1'000'000,
                               std::optional<std::vector<double>> start = {});

struct TripleResiduals {
    double aggregate_equation = 0.0;      // r_x vs sum_i d_xi J0(i)
    double original_equation = 0.0;       // J0(i) vs min_u sum_j p (g + alpha J1(j))
    double interpolation_equation = 0.0;  // J1(j) vs sum_y phi_jy r_y
    bool passed = false;

    double max_residual() const {
        return std::max({aggregate_equation, original_equation, interpolation_equation});
    }
};

/// Residuals of the three coupled optimality equations at the given solution.
TripleResiduals verify_bellman_triple(const DiscountedMDP& mdp, const AggregationArchitecture& arch,
                                      const AggregateSolution& solution, double tol);

/// Independent route to the same fixed point: cycles r <- D J0,
/// J0 <- backup of J1, J1 <- Phi r until the coupled equations agree.
/// Cross-validates solve_r_star.
AggregateSolution solve_by_triple_iteration(const DiscountedMDP& mdp,
                                            const AggregationArchitecture& arch, double tol,
                                            long max_iterations = 1'000'000);

}  // namespace aggmdp
