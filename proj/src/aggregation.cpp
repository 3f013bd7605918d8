#include "aggmdp/aggregation.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "aggmdp/errors.hpp"
#include "text.hpp"

namespace aggmdp {

using detail::strf;

std::vector<std::string> default_labels(int num_aggregate) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(num_aggregate));
    for (int x = 0; x < num_aggregate; ++x) {
        labels.push_back("x" + std::to_string(x + 1));
    }
    return labels;
}

namespace {

void check_rows(const std::vector<SparseRow>& rows, int num_columns, const char* matrix,
                const char* row_noun, const char* column_noun, std::vector<std::string>& errors) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        double row_sum = 0.0;
        int previous_column = -1;
        for (const auto& [column, weight] : rows[r]) {
            if (column < 0 || column >= num_columns) {
                errors.push_back(strf("%s row %zu (%s): %s index %d out of range", matrix, r + 1,
                                      row_noun, column_noun, column));
            }
            if (column <= previous_column) {
                errors.push_back(strf("%s row %zu (%s): duplicate or unsorted %s index %d", matrix,
                                      r + 1, row_noun, column_noun, column));
            }
            previous_column = column;
            if (!(weight >= 0.0)) {
                errors.push_back(
                    strf("%s row %zu (%s): negative entry %g", matrix, r + 1, row_noun, weight));
            }
            row_sum += weight;
        }
        if (std::abs(row_sum - 1.0) > 1e-9) {
            errors.push_back(strf("%s row %zu (%s): entries sum to %.12g, not 1", matrix, r + 1,
                                  row_noun, row_sum));
        }
    }
}

/// Normalizes a dense weight row into a sorted sparse row, dropping zeros.
SparseRow normalized_row(const std::vector<double>& weights, const char* what, std::size_t row) {
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw ValidationError(strf("%s row %zu has a negative or non-finite weight", what, row + 1));
        }
        total += w;
    }
    if (!(total > 0.0)) {
        throw ValidationError(strf("%s row %zu has zero sum", what, row + 1));
    }
    SparseRow out;
    for (std::size_t c = 0; c < weights.size(); ++c) {
        if (weights[c] > 0.0) {
            out.emplace_back(static_cast<int>(c), weights[c] / total);
        }
    }
    return out;
}

}  // namespace

ValidationReport validate(const AggregationArchitecture& arch, int num_states) {
    ValidationReport report;
    if (arch.num_aggregate <= 0) {
        report.errors.push_back("architecture has no aggregate states");
        return report;
    }
    if (!arch.labels.empty() && arch.labels.size() != static_cast<std::size_t>(arch.num_aggregate)) {
        report.errors.push_back(strf("expected %d labels, found %zu", arch.num_aggregate,
                                     arch.labels.size()));
    }
    if (arch.disaggregation.size() != static_cast<std::size_t>(arch.num_aggregate)) {
        report.errors.push_back(strf("disaggregation has %zu rows, expected one per aggregate state (%d)",
                                     arch.disaggregation.size(), arch.num_aggregate));
    }
    if (arch.aggregation.size() != static_cast<std::size_t>(num_states)) {
        report.errors.push_back(strf("aggregation has %zu rows, expected one per original state (%d)",
                                     arch.aggregation.size(), num_states));
    }
    check_rows(arch.disaggregation, num_states, "disaggregation", "aggregate state",
               "original-state", report.errors);
    check_rows(arch.aggregation, arch.num_aggregate, "aggregation", "original state",
               "aggregate-state", report.errors);

    if (report.errors.empty()) {
        for (const Footprint& fp : footprints(arch)) {
            if (fp.members.empty()) {
                report.warnings.push_back(
                    strf("aggregate state %d has an empty footprint", fp.aggregate_state));
            }
        }
    }
    return report;
}

void require_valid(const AggregationArchitecture& arch, int num_states) {
    auto report = validate(arch, num_states);
    if (!report.valid()) {
        throw ValidationError("invalid aggregation architecture", report.errors);
    }
}

ConditionCheck check_condition(const AggregationArchitecture& arch) {
    for (std::size_t x = 0; x < arch.disaggregation.size(); ++x) {
        for (const auto& [state, weight] : arch.disaggregation[x]) {
            if (!(weight > 0.0)) {
                continue;
            }
            const SparseRow& phi_row = arch.aggregation[static_cast<std::size_t>(state)];
            const bool aggregates_back =
                std::any_of(phi_row.begin(), phi_row.end(), [&](const auto& entry) {
                    return entry.first == static_cast<int>(x) && entry.second > 0.0;
                });
            if (!aggregates_back) {
                return ConditionCheck{false, static_cast<int>(x), state};
            }
        }
    }
    return ConditionCheck{};
}

std::vector<Footprint> footprints(const AggregationArchitecture& arch) {
    std::vector<Footprint> result(static_cast<std::size_t>(arch.num_aggregate));
    for (int x = 0; x < arch.num_aggregate; ++x) {
        result[static_cast<std::size_t>(x)].aggregate_state = x;
    }
    for (std::size_t j = 0; j < arch.aggregation.size(); ++j) {
        for (const auto& [x, phi] : arch.aggregation[j]) {
            if (phi > 0.0) {
                result[static_cast<std::size_t>(x)].members.push_back(static_cast<int>(j));
            }
        }
    }
    return result;
}

AggregationArchitecture hard_aggregation(const std::vector<std::vector<int>>& partition,
                                         const std::vector<std::vector<double>>& disagg_weights) {
    const int num_aggregate = static_cast<int>(partition.size());
    if (num_aggregate == 0) {
        throw ValidationError("partition is empty");
    }
    std::size_t n = 0;
    for (const auto& set : partition) {
        if (set.empty()) {
            throw ValidationError("partition contains an empty set");
        }
        n += set.size();
    }
    if (!disagg_weights.empty() && disagg_weights.size() != partition.size()) {
        throw ValidationError(strf("expected %zu disaggregation weight rows, found %zu",
                                   partition.size(), disagg_weights.size()));
    }

    AggregationArchitecture arch;
    arch.num_aggregate = num_aggregate;
    arch.labels = default_labels(num_aggregate);
    arch.aggregation.assign(n, {});
    arch.disaggregation.assign(static_cast<std::size_t>(num_aggregate), {});

    std::vector<bool> seen(n, false);
    for (std::size_t x = 0; x < partition.size(); ++x) {
        for (int state : partition[x]) {
            if (state < 0 || static_cast<std::size_t>(state) >= n) {
                throw ValidationError(
                    strf("partition does not cover 1..%zu: state %d out of range", n, state + 1));
            }
            if (seen[static_cast<std::size_t>(state)]) {
                throw ValidationError(strf("partition sets overlap at state %d", state + 1));
            }
            seen[static_cast<std::size_t>(state)] = true;
            arch.aggregation[static_cast<std::size_t>(state)] = {{static_cast<int>(x), 1.0}};
        }

        std::vector<int> members = partition[x];
        std::sort(members.begin(), members.end());
        SparseRow& d_row = arch.disaggregation[x];
        if (disagg_weights.empty()) {
            const double uniform = 1.0 / static_cast<double>(members.size());
            for (int state : members) {
                d_row.emplace_back(state, uniform);
            }
        } else {
            if (disagg_weights[x].size() != partition[x].size()) {
                throw ValidationError(strf("disaggregation weight row %zu has %zu entries, set has %zu",
                                           x + 1, disagg_weights[x].size(), partition[x].size()));
            }
            std::vector<std::pair<int, double>> weighted;
            for (std::size_t k = 0; k < partition[x].size(); ++k) {
                weighted.emplace_back(partition[x][k], disagg_weights[x][k]);
            }
            std::sort(weighted.begin(), weighted.end());
            std::vector<double> dense;
            dense.reserve(weighted.size());
            for (const auto& [state, w] : weighted) {
                dense.push_back(w);
            }
            SparseRow normalized = normalized_row(dense, "disaggregation weight", x);
            for (const auto& [local, w] : normalized) {
                d_row.emplace_back(weighted[static_cast<std::size_t>(local)].first, w);
            }
        }
    }
    return arch;
}

AggregationArchitecture soft_aggregation(const std::vector<std::vector<double>>& memberships,
                                         const std::vector<std::vector<double>>& disagg_weights) {
    const std::size_t n = memberships.size();
    const std::size_t num_aggregate = disagg_weights.size();
    if (n == 0 || num_aggregate == 0) {
        throw ValidationError("soft aggregation requires at least one state and one aggregate state");
    }

    AggregationArchitecture arch;
    arch.num_aggregate = static_cast<int>(num_aggregate);
    arch.labels = default_labels(arch.num_aggregate);
    arch.aggregation.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (memberships[j].size() != num_aggregate) {
            throw ValidationError(strf("membership row %zu has %zu entries, expected %zu", j + 1,
                                       memberships[j].size(), num_aggregate));
        }
        arch.aggregation.push_back(normalized_row(memberships[j], "membership", j));
    }
    arch.disaggregation.reserve(num_aggregate);
    for (std::size_t x = 0; x < num_aggregate; ++x) {
        if (disagg_weights[x].size() != n) {
            throw ValidationError(strf("disaggregation row %zu has %zu entries, expected %zu", x + 1,
                                       disagg_weights[x].size(), n));
        }
        arch.disaggregation.push_back(normalized_row(disagg_weights[x], "disaggregation", x));
    }
    return arch;
}

AggregationArchitecture representative_states(const std::vector<int>& representatives,
                                              const std::vector<std::vector<double>>& interp_weights) {
    const std::size_t num_aggregate = representatives.size();
    const std::size_t n = interp_weights.size();
    if (num_aggregate == 0 || n == 0) {
        throw ValidationError("representative-state scheme requires representatives and weights");
    }
    std::vector<int> sorted = representatives;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ValidationError("representative states must be distinct");
    }

    AggregationArchitecture arch;
    arch.num_aggregate = static_cast<int>(num_aggregate);
    arch.labels = default_labels(arch.num_aggregate);
    arch.disaggregation.assign(num_aggregate, {});
    for (std::size_t x = 0; x < num_aggregate; ++x) {
        const int rep = representatives[x];
        if (rep < 0 || static_cast<std::size_t>(rep) >= n) {
            throw ValidationError(strf("representative state %d out of range 1..%zu", rep + 1, n));
        }
        arch.disaggregation[x] = {{rep, 1.0}};
    }
    arch.aggregation.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (interp_weights[j].size() != num_aggregate) {
            throw ValidationError(strf("interpolation weight row %zu has %zu entries, expected %zu",
                                       j + 1, interp_weights[j].size(), num_aggregate));
        }
        arch.aggregation.push_back(normalized_row(interp_weights[j], "interpolation weight", j));
    }
    for (std::size_t x = 0; x < num_aggregate; ++x) {
        const int rep = representatives[x];
        const SparseRow& row = arch.aggregation[static_cast<std::size_t>(rep)];
        const bool keeps_mass = std::any_of(row.begin(), row.end(), [&](const auto& entry) {
            return entry.first == static_cast<int>(x) && entry.second > 0.0;
        });
        if (!keeps_mass) {
            throw ValidationError(strf(
                "representative state %d has zero interpolation weight on its own aggregate state "
                "%zu; the disaggregation support condition would fail",
                rep + 1, x + 1));
        }
    }
    return arch;
}

AggregationArchitecture representative_features(const std::vector<std::string>& feature_of) {
    const std::size_t n = feature_of.size();
    if (n == 0) {
        throw ValidationError("feature map is empty");
    }

    std::map<std::string, int> index_of_feature;
    std::vector<std::string> labels;
    std::vector<std::vector<int>> classes;
    for (std::size_t j = 0; j < n; ++j) {
        auto [it, inserted] = index_of_feature.try_emplace(feature_of[j],
                                                           static_cast<int>(labels.size()));
        if (inserted) {
            labels.push_back(feature_of[j]);
            classes.emplace_back();
        }
        classes[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(j));
    }

    AggregationArchitecture arch = hard_aggregation(classes);
    arch.labels = labels;
    return arch;
}

}  // namespace aggmdp
