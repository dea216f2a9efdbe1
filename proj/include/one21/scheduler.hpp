// Turns an optimal link activation into an explicit time-shared schedule of
// valid network states. The production path is a Birkhoff-von-Neumann style
// decomposition of the (padded) activation matrix; the LCM multigraph
// edge-coloring construction is kept as a cross-validating alternative.
#pragma once

#include "one21/capacity.hpp"
#include "one21/model.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace one21 {

// One joint beam configuration: a matching between transmit and receive
// sides, i.e. every node transmits on at most one active link and receives
// on at most one.
struct NetworkState {
    std::set<Link> active_links;

    bool idle() const { return active_links.empty(); }
    bool contains(const Link& link) const { return active_links.count(link) > 0; }
    auto operator<=>(const NetworkState&) const = default;
};

// Time sharing over states: durations are nonnegative and sum to exactly 1,
// with an explicit all-idle state absorbing slack. States are pairwise
// distinct; entries keep first-emission order.
struct Schedule {
    std::vector<std::pair<NetworkState, Rational>> entries;

    Rational total_duration() const;
    // Fraction of time the given link is active across all entries.
    Rational coverage(const Link& link) const;
};

// Merges duplicate states, drops zero durations, pads with an idle state up
// to total duration 1. Throws std::invalid_argument on negative durations or
// totals above 1.
Schedule make_schedule(std::vector<std::pair<NetworkState, Rational>> entries);

// Matching-property, duplex and link-existence violations of a single state.
std::vector<std::string> validate_state(const NetworkState& state, const Network& network);

// Decomposes a budget-feasible activation into at most
// (N+2)^2 - 2(N+2) + 2 states whose weighted sum covers every activation
// fraction: sum of durations of states containing a link >= its fraction.
// Throws std::invalid_argument when the activation violates its budgets.
Schedule bvn_schedule(const LinkActivation& activation, int n_relays);

namespace detail {

// One extracted perfect matching: match[i] is the column paired with row i.
struct WeightedMatching {
    Rational weight;
    std::vector<int> match;
};

// Caratheodory pruning of an affinely dependent weighted-matching family:
// removes members without changing the weighted sum or the total weight,
// down to at most (size-1)^2 + 1 members (or the larger target). Used by
// bvn_schedule when greedy extraction overshoots the state bound; declared
// here so the arithmetic is testable on its own.
void reduce_matching_family(std::vector<WeightedMatching>& parts, int size,
                            std::size_t target);

}  // namespace detail

struct LcmColoring {
    Schedule schedule;
    Integer lcm = Integer(1);   // common denominator M of all fractions
    long long num_colors = 0;   // Delta, the multigraph's maximum degree
};

// The multigraph construction: scale fractions by the LCM of their
// denominators, edge-color the resulting bipartite multigraph with Delta
// colors, and emit one state per color with duration 1/Delta. Delta <= M on
// every budget-feasible input. Throws SizeLimitError when the multigraph
// would exceed max_multigraph_edges.
LcmColoring lcm_coloring(const LinkActivation& activation,
                         long long max_multigraph_edges = 1'000'000);
Schedule lcm_coloring_schedule(const LinkActivation& activation,
                               long long max_multigraph_edges = 1'000'000);

struct SimulationResult {
    bool ok = false;
    Rational rate;  // sum of flow out of the source; meaningful when ok
    std::vector<std::string> violations;
};

// Replays a schedule against a flow: every state must be valid, durations
// must sum to 1, the flow must conserve at relays, and each link's flow must
// fit within (time the link is active) * capacity. Violations name the link
// and the deficit.
SimulationResult simulate(const Network& network, const Schedule& schedule,
                          const LinkFlow& flow);

}  // namespace one21
