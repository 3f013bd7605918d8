#pragma once

#include <string>

#include "aggmdp/aggregate_solver.hpp"
#include "aggmdp/aggregation.hpp"
#include "aggmdp/error_bound.hpp"
#include "aggmdp/generators.hpp"
#include "aggmdp/mdp.hpp"
#include "aggmdp/suite.hpp"

namespace aggmdp {

/// All writers emit floats at 12 significant digits so that identical inputs
/// produce byte-identical files.
double round12(double x);
std::string format12(double x);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Model format:
/// {"n": int, "discount": float, "states": [{"actions": [{"label": str,
///  "transitions": [[j(1-based), p, g], ...]}]}]}
DiscountedMDP mdp_from_json(const std::string& text);
DiscountedMDP load_mdp(const std::string& path);
std::string mdp_to_json(const DiscountedMDP& mdp);
void save_mdp(const DiscountedMDP& mdp, const std::string& path);

/// Architecture format (sparse triples, omitted entries are zero):
/// {"num_aggregate": int, "labels": [str],
///  "disaggregation": [[x, i(1-based), d], ...],
///  "aggregation": [[j(1-based), y, phi], ...]}
/// Aggregate-state indices are 0-based; original states are 1-based.
/// When `expected_states` is negative the state count is inferred from the
/// largest index present.
AggregationArchitecture aggregation_from_json(const std::string& text, int expected_states = -1);
AggregationArchitecture load_aggregation(const std::string& path, int expected_states = -1);
std::string aggregation_to_json(const AggregationArchitecture& arch);
void save_aggregation(const AggregationArchitecture& arch, const std::string& path);

/// {"value": [...], "policy": [action labels], "iterations": int,
///  "sup_norm_residual": float}
std::string solve_report_to_json(const SolveReport& report, const DiscountedMDP& mdp);

/// {"r_star": [...], "j0": [...], "j1": [...], "j_tilde": [...],
///  "iterations": int, "residual": float}
std::string aggregate_solution_to_json(const AggregateSolution& solution);

/// {"condition_holds": bool, "epsilon": float, "bound": float,
///  "actual_error": float, "bound_satisfied": bool, "worst_state": int(1-based),
///  "per_state_errors": [...]}
std::string bound_audit_to_json(const BoundAudit& audit);

/// {"kind": "counterexample"|"random"|"gridworld", "seed": int,
///  "parameters": {...}} with kind-specific parameters.
GeneratorSpec generator_spec_from_json(const std::string& text);
GeneratorSpec load_generator_spec(const std::string& path);

std::string suite_summary_to_json(const SuiteSummary& summary);

}  // namespace aggmdp
