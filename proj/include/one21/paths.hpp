// The path-utilization view of the capacity: enumerate source-destination
// paths, solve the fractional path LP whose optimum equals the flow LP value,
// and check the sparsity and best-path guarantees that hold at its corner
// points (at most 2N+2 active paths; the widest path carries at least a
// 1/(2N+2) share of the capacity).
#pragma once

#include "one21/capacity.hpp"
#include "one21/model.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace one21 {

// Simple source-destination path. capacity is the full-duplex path capacity,
// the minimum link capacity along the path.
struct Path {
    std::vector<NodeId> nodes;
    Rational capacity;

    std::vector<Link> links() const;
    bool uses(const Link& link) const;
    auto operator<=>(const Path&) const = default;
};

// All simple paths from the source to the destination, in lexicographic
// order of their node sequences. Throws SizeLimitError past max_paths.
std::vector<Path> enumerate_paths(const Network& network, std::size_t max_paths = 100000);

// Share of time a link must run to sustain the path's capacity:
// path.capacity / link capacity, in (0, 1], exactly 1 on bottleneck links.
// Throws std::invalid_argument when the link is not on the path.
Rational activation_fraction(const Path& path, const Network& network, const Link& link);

struct PathSolution {
    std::vector<Path> paths;            // the enumerated paths, in order
    std::vector<Rational> utilization;  // x_p per path
    Rational value;
};

// Optimal vertex of the path LP: maximize sum x_p * C_p subject to per-node
// transmit and receive time budgets. Equals fd_capacity exactly.
PathSolution solve_p1(const Network& network, std::size_t max_paths = 100000);

struct SparsityReport {
    int active_count = 0;
    int bound = 0;       // 2N+2, holds at every vertex
    bool ok = false;
    bool two_layer = false;
    int two_layer_bound = 0;  // 2M+1, reported as a soft check on 2-layer nets
    bool two_layer_ok = false;
};

SparsityReport sparsity_report(const PathSolution& solution, const Network& network);

// Every link goes source -> first layer -> second layer -> destination.
bool is_two_layer(const Network& network);

// Widest (maximum-bottleneck) path, found by a Dijkstra sweep without
// enumeration; lexicographically smallest among the optima. nullopt when the
// destination is unreachable.
std::optional<Path> best_path(const Network& network);

// P1 solution mapped to per-link activations and flows:
// fraction = sum over paths through the link of x_p * C_p / l,
// flow = sum of x_p * C_p. Budget-feasible and schedulable.
struct LinkSolution {
    LinkActivation activation;
    LinkFlow flow;
};
LinkSolution induced_link_solution(const PathSolution& solution, const Network& network);

}  // namespace one21
