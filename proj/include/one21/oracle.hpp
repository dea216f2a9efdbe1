// Brute-force ground truth for small networks: enumerate every valid joint
// beam state and solve the schedule LP over explicit per-state variables,
// plus exhaustive cut enumeration. Deliberately shares nothing with the
// production path beyond Rational and the simplex core, so the two routes
// can certify each other.
#pragma once

#include "one21/model.hpp"
#include "one21/scheduler.hpp"

#include <cstddef>
#include <vector>

namespace one21 {

struct StateSpace {
    std::vector<NetworkState> states;  // canonical order, idle state included
};

// All subsets of positive links that form a valid state under the network's
// duplex mode. Throws SizeLimitError past max_states.
StateSpace enumerate_states(const Network& network, std::size_t max_states = 100000);

struct BruteForceResult {
    Rational value;
    Schedule schedule;
};

// Exact optimum of the flow LP with one time-share variable per state;
// handles both duplex modes. The returned schedule achieves the value.
BruteForceResult brute_force_capacity(const Network& network, std::size_t max_states = 100000);

// Minimum over all source-side cuts of the schedule-weighted cut value.
// Enumerates all 2^N cuts; guarded to N <= 20.
Rational exhaustive_min_cut(const Network& network, const Schedule& schedule);

}  // namespace one21
