#pragma once

#include <string>
#include <utility>
#include <vector>

namespace aggmdp {

/// One sparse row of a row-stochastic matrix: (column, weight) pairs sorted
/// by column. Absent entries are zero.
using SparseRow = std::vector<std::pair<int, double>>;

/// Aggregation architecture: the aggregate-state set, the disaggregation
/// matrix D (one row per aggregate state, spanning original states) and the
/// aggregation matrix Phi (one row per original state, spanning aggregate
/// states). Aggregate states are dense 0-based indices with opaque labels.
struct AggregationArchitecture {
    int num_aggregate = 0;
    std::vector<std::string> labels;
    std::vector<SparseRow> disaggregation;  // D: |A| rows over 0..n-1
    std::vector<SparseRow> aggregation;     // Phi: n rows over 0..|A|-1

    int num_states() const { return static_cast<int>(aggregation.size()); }
};

std::vector<std::string> default_labels(int num_aggregate);

struct ValidationReport {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;  // e.g. aggregate states with empty footprints

    bool valid() const { return errors.empty(); }
};

/// Checks row sums, signs, dimensions, and index ranges against a model with
/// `num_states` states. Report-style: nothing is thrown.
ValidationReport validate(const AggregationArchitecture& arch, int num_states);

/// Throws ValidationError when the report has errors.
void require_valid(const AggregationArchitecture& arch, int num_states);

struct ConditionCheck {
    bool holds = true;
    int witness_aggregate = -1;  // when !holds: x with d_xi > 0 but phi_ix == 0
    int witness_state = -1;      // the offending i
};

/// The disaggregation support condition: d_xi > 0 implies phi_ix > 0 for
/// every aggregate state x and original state i. Positivity is exact (> 0).
ConditionCheck check_condition(const AggregationArchitecture& arch);

struct Footprint {
    int aggregate_state = 0;
    std::vector<int> members;  // {j | phi_jx > 0}, sorted
};

/// The support of each Phi column, one entry per aggregate state.
std::vector<Footprint> footprints(const AggregationArchitecture& arch);

/// 0/1 aggregation over a partition of {0..n-1}. Disaggregation defaults to
/// uniform over each set; optional weights are per-set, parallel to
/// `partition`, and are normalized. Satisfies the support condition by
/// construction.
AggregationArchitecture hard_aggregation(const std::vector<std::vector<int>>& partition,
                                         const std::vector<std::vector<double>>& disagg_weights = {});

/// Row-normalizes the given nonnegative weights; `memberships` is n x |A|,
/// `disagg_weights` is |A| x n. A zero row is an error naming the row.
AggregationArchitecture soft_aggregation(const std::vector<std::vector<double>>& memberships,
                                         const std::vector<std::vector<double>>& disagg_weights);

/// One aggregate state per representative original state: D rows are unit
/// vectors on the representatives, Phi interpolates with the given n x |A|
/// weights. Each representative must keep positive weight on its own
/// aggregate state, otherwise the support condition would fail and the
/// weights are rejected.
AggregationArchitecture representative_states(const std::vector<int>& representatives,
                                              const std::vector<std::vector<double>>& interp_weights);

/// One aggregate state per distinct feature value, ordered by first
/// occurrence and labeled by the value; hard Phi, uniform D over each
/// feature class.
AggregationArchitecture representative_features(const std::vector<std::string>& feature_of);

}  // namespace aggmdp
