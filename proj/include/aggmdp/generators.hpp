#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "aggmdp/aggregation.hpp"
#include "aggmdp/mdp.hpp"

namespace aggmdp {

/// Two absorbing states: state 0 self-loops at cost 0, state 1 at cost 1.
/// Aggregate state 0 disaggregates to state 0, aggregate state 1 to state 1.
/// Phi routes each state back to its own aggregate state with weight `delta`
/// and to the other with 1 - delta, so delta = 1 is exact hard aggregation
/// and delta = 0 crosses the wires completely, breaking the disaggregation
/// support condition.
std::pair<DiscountedMDP, AggregationArchitecture> counterexample(double alpha, double delta);

struct RandomMdpParams {
    int n = 5;
    int actions_per_state = 2;
    int branching = 2;
    double cost_min = 0.0;
    double cost_max = 1.0;
    double alpha = 0.9;
};

/// Each (state, action) row gets `branching` distinct successors with
/// normalized positive-uniform probabilities and uniform costs. The seed
/// fully determines the instance.
DiscountedMDP random_mdp(const RandomMdpParams& params, std::uint64_t seed);

/// Random supports with normalized positive-uniform weights; every aggregate
/// state keeps a nonempty footprint. With `enforce_condition`, each
/// disaggregation row's support is a subset of that aggregate state's
/// footprint, so the support condition holds by construction.
AggregationArchitecture random_aggregation(int n, int num_aggregate, std::uint64_t seed,
                                           bool enforce_condition);

/// 4-action navigation on width x height cells: unit step cost, absorbing
/// zero-cost target, intended move with probability 1 - noise and uniform
/// slip over the three other moves. Moves off the edge stay in place.
/// States are row-major, 0-based.
DiscountedMDP gridworld(int width, int height, double alpha, double noise, int target_cell);

enum class GeneratorKind { counterexample, random, gridworld };

/// Declarative instance request; `seed` fully determines the output.
struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::counterexample;
    std::uint64_t seed = 0;
    // counterexample and gridworld
    double alpha = 0.9;
    double delta = 0.0;
    // random
    RandomMdpParams random;
    std::optional<int> num_aggregate;  // when set, also emit an architecture
    bool enforce_condition = true;
    // gridworld
    int width = 1;
    int height = 1;
    double noise = 0.0;
    int target_cell = 0;
};

struct GeneratedInstance {
    DiscountedMDP mdp;
    std::optional<AggregationArchitecture> arch;
};

GeneratedInstance generate(const GeneratorSpec& spec);

}  // namespace aggmdp
