// Polynomial-size computation of the full-duplex approximate capacity via
// the link-based flow LP, plus min-cut certification of a fixed activation.
// The LP has one activation fraction and one flow variable per link; per-node
// transmit/receive budgets make the activation matrix doubly substochastic,
// which is exactly what the schedulers decompose into network states.
#pragma once

#include "one21/lp.hpp"
#include "one21/model.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace one21 {

// Fraction of time each link is active. Feasible when every node transmits
// at most 100% of the time and receives at most 100% of the time.
struct LinkActivation {
    std::map<Link, Rational> fractions;

    Rational fraction(const Link& link) const {
        auto it = fractions.find(link);
        return it == fractions.end() ? Rational(0) : it->second;
    }
};

// Flow carried by each link; conserved at relays and bounded by the
// activation-modified capacity fraction * l.
struct LinkFlow {
    std::map<Link, Rational> flows;

    Rational flow(const Link& link) const {
        auto it = flows.find(link);
        return it == flows.end() ? Rational(0) : it->second;
    }
};

// Budget violations (negative fractions, transmit/receive sums above 1).
std::vector<std::string> validate_activation(const LinkActivation& activation, int n_relays);

// Conservation and capacity violations of a flow against an activation.
std::vector<std::string> validate_flow(const LinkFlow& flow, const Network& network,
                                       const LinkActivation& activation);

struct FdCapacityResult {
    Rational value;
    LinkActivation activation;
    LinkFlow flow;
};

// Approximate capacity of a full-duplex network, computed from an optimal
// vertex of the link flow LP. A network without a source-destination path
// yields value 0 with an all-idle activation. Throws std::invalid_argument
// on half-duplex input.
FdCapacityResult fd_capacity(const Network& network);

struct MinCutResult {
    Rational value;
    std::set<NodeId> cut;  // contains the source, never the destination
};

// Minimum cut of the graph with capacities fraction * l, computed by exact
// max-flow with the cut recovered from the residual graph.
MinCutResult min_cut_value(const Network& network, const LinkActivation& activation);

}  // namespace one21
