// Specialized solvers for diamond networks (one layer of parallel relays).
// The N disjoint relay paths reduce the path LP to N variables with two
// budget rows, which pins the guarantees: at most 2 active relays in
// full-duplex, at most 3 in half-duplex, and the best relay carries at least
// half the capacity. Includes the explicit half-duplex schedule built around
// a pivot relay that works 100% of the time.
#pragma once

#include "one21/model.hpp"
#include "one21/scheduler.hpp"

#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace one21 {

// Relay i in [1:N] has a source link of capacity ell(i) and a destination
// link of capacity r(i).
struct DiamondNetwork {
    std::vector<std::pair<Rational, Rational>> relays;
    DuplexMode mode = DuplexMode::FullDuplex;

    int n_relays() const { return static_cast<int>(relays.size()); }
    const Rational& ell(int relay) const { return relays[relay - 1].first; }
    const Rational& r(int relay) const { return relays[relay - 1].second; }

    Network to_network() const;
};

// Recognizes networks whose positive links all go source->relay or
// relay->destination; nullopt otherwise.
std::optional<DiamondNetwork> diamond_from_network(const Network& network);

// Capacity of the two-hop path through one relay: min(ell, r) in
// full-duplex, the harmonic form ell*r/(ell+r) in half-duplex.
Rational relay_path_capacity(const DiamondNetwork& diamond, int relay);

struct DiamondCapacityResult {
    Rational value;
    std::vector<Rational> x;  // per-relay utilization, indexed by relay-1
};

// Optimal vertex of the diamond path LP, either mode. Relays with a
// zero-capacity hop are excluded before the LP is built.
DiamondCapacityResult diamond_capacity(const DiamondNetwork& diamond);

// Supports of optimal vertices: at most 2 relays in FD, 3 in HD.
std::set<int> fd_relay_selection(const DiamondNetwork& diamond);
std::set<int> hd_relay_selection(const DiamondNetwork& diamond);

// Per-relay (source-link share, destination-link share); flow balance
// share_l * ell = share_r * r holds per relay.
struct HdActivation {
    std::vector<std::pair<Rational, Rational>> per_relay;

    Rational source_share(int relay) const { return per_relay[relay - 1].first; }
    Rational destination_share(int relay) const { return per_relay[relay - 1].second; }
};

// Utilization vector mapped to link shares:
// share_l = x * r/(ell+r), share_r = x * ell/(ell+r).
HdActivation hd_activation_from_vertex(const DiamondNetwork& diamond,
                                       const std::vector<Rational>& x);

struct P4Result {
    Rational value;
    HdActivation activation;
};

// The half-duplex schedule LP over link shares, solved directly; equals
// diamond_capacity exactly and exists to cross-check it.
P4Result solve_p4(const DiamondNetwork& diamond);

// Lowest-index relay whose two shares sum to exactly 1. Present at every
// optimal vertex with positive value.
std::optional<int> find_pivot_relay(const HdActivation& activation);

// Explicit half-duplex schedule: while the pivot relay transmits, other
// relays receive, and vice versa; residual states let the pivot work alone.
// Simulates to exactly the half-duplex capacity.
Schedule hd_schedule(const DiamondNetwork& diamond);

// Link flows realizing the diamond capacity, for schedule verification.
LinkFlow diamond_flow(const DiamondNetwork& diamond, const std::vector<Rational>& x);

struct BestRelayGuarantee {
    int relay = 0;              // lowest-index best relay, 0 when none exists
    Rational best_capacity;
    Rational ratio;             // best_capacity / capacity, >= 1/2 (1 when capacity is 0)
};

BestRelayGuarantee best_relay_guarantee(const DiamondNetwork& diamond);

}  // namespace one21
