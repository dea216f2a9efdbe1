#include "one21/paths.hpp"

#include "one21/errors.hpp"
#include "one21/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace one21 {

std::vector<Link> Path::links() const {
    std::vector<Link> result;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        result.emplace_back(nodes[i], nodes[i + 1]);
    }
    return result;
}

bool Path::uses(const Link& link) const {
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        if (nodes[i] == link.first && nodes[i + 1] == link.second) return true;
    }
    return false;
}

namespace {

std::map<NodeId, std::vector<std::pair<NodeId, Rational>>> adjacency(const Network& network) {
    std::map<NodeId, std::vector<std::pair<NodeId, Rational>>> out;
    for (const auto& [link, cap] : network.positive_links()) {
        out[link.first].emplace_back(link.second, cap);
    }
    return out;  // neighbor lists are ascending because the link map is ordered
}

void walk_paths(const std::map<NodeId, std::vector<std::pair<NodeId, Rational>>>& adj,
                NodeId node, NodeId destination, std::vector<NodeId>& trail,
                std::vector<bool>& visited, Rational bottleneck, std::vector<Path>& out,
                std::size_t max_paths) {
    if (node == destination) {
        out.push_back({trail, bottleneck});
        if (out.size() > max_paths) {
            throw SizeLimitError("path enumeration exceeds " + std::to_string(max_paths) +
                                 " paths");
        }
        return;
    }
    auto it = adj.find(node);
    if (it == adj.end()) return;
    for (const auto& [next, cap] : it->second) {
        if (visited[next]) continue;
        visited[next] = true;
        trail.push_back(next);
        walk_paths(adj, next, destination, trail, visited,
                   trail.size() == 2 ? cap : std::min(bottleneck, cap), out, max_paths);
        trail.pop_back();
        visited[next] = false;
    }
}

}  // namespace

std::vector<Path> enumerate_paths(const Network& network, std::size_t max_paths) {
    auto adj = adjacency(network);
    std::vector<Path> paths;
    std::vector<NodeId> trail{network.source()};
    std::vector<bool> visited(network.num_nodes(), false);
    visited[network.source()] = true;
    walk_paths(adj, network.source(), network.destination(), trail, visited, Rational(0),
               paths, max_paths);
    return paths;
}

Rational activation_fraction(const Path& path, const Network& network, const Link& link) {
    if (!path.uses(link)) {
        throw std::invalid_argument("link is not on the path");
    }
    return path.capacity / network.capacity(link.first, link.second);
}

PathSolution solve_p1(const Network& network, std::size_t max_paths) {
    if (network.mode() != DuplexMode::FullDuplex) {
        throw std::invalid_argument("the path LP applies to full-duplex networks");
    }
    PathSolution solution;
    solution.paths = enumerate_paths(network, max_paths);
    solution.value = Rational(0);
    if (solution.paths.empty()) return solution;

    LinearProgram lp;
    for (const auto& path : solution.paths) {
        lp.add_variable(path.capacity);
    }
    // Transmit budget of each node: paths through it, weighted by the share
    // of time its outgoing link must run.
    for (NodeId node = 0; node <= network.n_relays(); ++node) {
        std::vector<std::pair<int, Rational>> terms;
        for (std::size_t p = 0; p < solution.paths.size(); ++p) {
            const auto& nodes = solution.paths[p].nodes;
            for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
                if (nodes[i] == node) {
                    terms.emplace_back(static_cast<int>(p),
                                       activation_fraction(solution.paths[p], network,
                                                           {nodes[i], nodes[i + 1]}));
                }
            }
        }
        if (!terms.empty()) lp.add_le(terms, Rational(1));
    }
    // Receive budgets, over incoming links.
    for (NodeId node = 1; node <= network.n_relays() + 1; ++node) {
        std::vector<std::pair<int, Rational>> terms;
        for (std::size_t p = 0; p < solution.paths.size(); ++p) {
            const auto& nodes = solution.paths[p].nodes;
            for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
                if (nodes[i + 1] == node) {
                    terms.emplace_back(static_cast<int>(p),
                                       activation_fraction(solution.paths[p], network,
                                                           {nodes[i], nodes[i + 1]}));
                }
            }
        }
        if (!terms.empty()) lp.add_le(terms, Rational(1));
    }

    VertexSolution vertex = solve_lp(lp);
    if (vertex.status != LpStatus::Optimal) {
        throw std::logic_error("path LP must have an optimal vertex");
    }
    solution.utilization = vertex.values;
    solution.value = vertex.objective_value;
    return solution;
}

bool is_two_layer(const Network& network) {
    const NodeId source = network.source();
    const NodeId destination = network.destination();
    std::set<NodeId> first_layer, second_layer;
    for (const auto& [link, cap] : network.positive_links()) {
        if (link.first == source && link.second != destination) {
            first_layer.insert(link.second);
        }
        if (link.second == destination && link.first != source) {
            second_layer.insert(link.first);
        }
    }
    if (first_layer.empty() || second_layer.empty()) return false;
    for (NodeId relay : first_layer) {
        if (second_layer.count(relay)) return false;
    }
    for (const auto& [link, cap] : network.positive_links()) {
        auto [from, to] = link;
        bool source_edge = from == source && first_layer.count(to);
        bool middle_edge = first_layer.count(from) && second_layer.count(to);
        bool sink_edge = second_layer.count(from) && to == destination;
        if (!source_edge && !middle_edge && !sink_edge) return false;
    }
    return true;
}

SparsityReport sparsity_report(const PathSolution& solution, const Network& network) {
    SparsityReport report;
    for (const auto& x : solution.utilization) {
        if (x > 0) ++report.active_count;
    }
    report.bound = 2 * network.n_relays() + 2;
    report.ok = report.active_count <= report.bound;
    report.two_layer = is_two_layer(network);
    if (report.two_layer) {
        std::set<NodeId> first_layer, second_layer;
        for (const auto& [link, cap] : network.positive_links()) {
            if (link.first == network.source()) first_layer.insert(link.second);
            if (link.second == network.destination()) second_layer.insert(link.first);
        }
        int per_layer = static_cast<int>(std::max(first_layer.size(), second_layer.size()));
        report.two_layer_bound = 2 * per_layer + 1;
        report.two_layer_ok = report.active_count <= report.two_layer_bound;
    }
    return report;
}

std::optional<Path> best_path(const Network& network) {
    auto adj = adjacency(network);
    const int nodes = network.num_nodes();
    const NodeId source = network.source();
    const NodeId destination = network.destination();

    // Maximum-bottleneck Dijkstra: repeatedly settle the node with the best
    // bottleneck reached so far. The source's empty path has no bottleneck,
    // so its links relax directly to their own capacities.
    std::vector<Rational> best(nodes, Rational(0));
    std::vector<bool> reached(nodes, false), settled(nodes, false);
    reached[source] = settled[source] = true;
    if (auto it = adj.find(source); it != adj.end()) {
        for (const auto& [next, cap] : it->second) {
            reached[next] = true;
            best[next] = cap;
        }
    }
    for (;;) {
        int u = -1;
        for (int v = 0; v < nodes; ++v) {
            if (!reached[v] || settled[v]) continue;
            if (u < 0 || best[v] > best[u]) u = v;
        }
        if (u < 0) break;
        settled[u] = true;
        auto it = adj.find(u);
        if (it == adj.end()) continue;
        for (const auto& [next, cap] : it->second) {
            Rational through = std::min(best[u], cap);
            if (!reached[next] || through > best[next]) {
                reached[next] = true;
                best[next] = through;
            }
        }
    }
    if (!reached[destination]) return std::nullopt;
    const Rational bottleneck = best[destination];

    // Lexicographically smallest simple path within links of capacity at
    // least the optimum; ordered depth-first search finds it directly.
    std::vector<NodeId> trail{source};
    std::vector<bool> visited(nodes, false);
    visited[source] = true;
    auto dfs = [&](auto&& self, NodeId node) -> bool {
        if (node == destination) return true;
        auto it = adj.find(node);
        if (it == adj.end()) return false;
        for (const auto& [next, cap] : it->second) {
            if (visited[next] || cap < bottleneck) continue;
            visited[next] = true;
            trail.push_back(next);
            if (self(self, next)) return true;
            trail.pop_back();
            visited[next] = false;
        }
        return false;
    };
    if (!dfs(dfs, source)) return std::nullopt;
    return Path{trail, bottleneck};
}

LinkSolution induced_link_solution(const PathSolution& solution, const Network& network) {
    LinkSolution result;
    for (std::size_t p = 0; p < solution.paths.size(); ++p) {
        const Rational& x = solution.utilization[p];
        if (x == 0) continue;
        Rational flow = x * solution.paths[p].capacity;
        for (const auto& link : solution.paths[p].links()) {
            result.flow.flows[link] += flow;
            result.activation.fractions[link] +=
                flow / network.capacity(link.first, link.second);
        }
    }
    return result;
}

}  // namespace one21
