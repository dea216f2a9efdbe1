#include "one21/capacity.hpp"

#include <deque>
#include <stdexcept>

namespace one21 {

std::vector<std::string> validate_activation(const LinkActivation& activation, int n_relays) {
    std::vector<std::string> violations;
    std::map<NodeId, Rational> transmit, receive;
    for (const auto& [link, fraction] : activation.fractions) {
        auto [from, to] = link;
        if (from < 0 || from > n_relays + 1 || to < 0 || to > n_relays + 1) {
            violations.push_back("link (" + std::to_string(from) + "," + std::to_string(to) +
                                 ") outside [0 : N+1]");
            continue;
        }
        if (fraction < 0) {
            violations.push_back("negative fraction on link (" + std::to_string(from) + "," +
                                 std::to_string(to) + ")");
        }
        transmit[from] += fraction;
        receive[to] += fraction;
    }
    for (const auto& [node, total] : transmit) {
        if (total > 1) {
            violations.push_back("node " + std::to_string(node) +
                                 " transmits for more than 100% of the time (" +
                                 format_rational(total) + ")");
        }
    }
    for (const auto& [node, total] : receive) {
        if (total > 1) {
            violations.push_back("node " + std::to_string(node) +
                                 " receives for more than 100% of the time (" +
                                 format_rational(total) + ")");
        }
    }
    return violations;
}

std::vector<std::string> validate_flow(const LinkFlow& flow, const Network& network,
                                       const LinkActivation& activation) {
    std::vector<std::string> violations;
    for (NodeId relay = 1; relay <= network.n_relays(); ++relay) {
        Rational in(0), out(0);
        for (const auto& [link, f] : flow.flows) {
            if (link.second == relay) in += f;
            if (link.first == relay) out += f;
        }
        if (in != out) {
            violations.push_back("flow not conserved at relay " + std::to_string(relay));
        }
    }
    for (const auto& [link, f] : flow.flows) {
        if (f < 0) {
            violations.push_back("negative flow on link (" + std::to_string(link.first) + "," +
                                 std::to_string(link.second) + ")");
            continue;
        }
        Rational budget = activation.fraction(link) * network.capacity(link.first, link.second);
        if (f > budget) {
            violations.push_back("flow on link (" + std::to_string(link.first) + "," +
                                 std::to_string(link.second) + ") exceeds fraction * capacity");
        }
    }
    return violations;
}

namespace {

// Links that can carry source-destination flow: both endpoints reachable
// from the source and co-reaching the destination over positive links.
std::map<Link, Rational> useful_links(const Network& network) {
    auto links = network.positive_links();
    const int nodes = network.num_nodes();
    std::vector<bool> from_source(nodes, false), to_destination(nodes, false);

    std::deque<NodeId> queue{network.source()};
    from_source[network.source()] = true;
    while (!queue.empty()) {
        NodeId u = queue.front();
        queue.pop_front();
        for (const auto& [link, cap] : links) {
            if (link.first == u && !from_source[link.second]) {
                from_source[link.second] = true;
                queue.push_back(link.second);
            }
        }
    }
    queue = {network.destination()};
    to_destination[network.destination()] = true;
    while (!queue.empty()) {
        NodeId u = queue.front();
        queue.pop_front();
        for (const auto& [link, cap] : links) {
            if (link.second == u && !to_destination[link.first]) {
                to_destination[link.first] = true;
                queue.push_back(link.first);
            }
        }
    }

    std::map<Link, Rational> kept;
    for (const auto& [link, cap] : links) {
        bool first_useful = from_source[link.first] && to_destination[link.first];
        bool second_useful = from_source[link.second] && to_destination[link.second];
        if (first_useful && second_useful) kept.insert({link, cap});
    }
    return kept;
}

// Edmonds-Karp over rationals. Termination does not depend on capacity
// values, so exact arithmetic costs nothing here.
class MaxFlow {
public:
    MaxFlow(int num_nodes, NodeId source, NodeId sink)
        : num_nodes_(num_nodes), source_(source), sink_(sink), head_(num_nodes) {}

    void add_edge(NodeId from, NodeId to, const Rational& capacity) {
        head_[from].push_back(static_cast<int>(edges_.size()));
        edges_.push_back({from, to, capacity, Rational(0)});
        head_[to].push_back(static_cast<int>(edges_.size()));
        edges_.push_back({to, from, Rational(0), Rational(0)});
    }

    Rational run() {
        Rational total(0);
        for (;;) {
            std::vector<int> parent_edge(num_nodes_, -1);
            std::vector<bool> seen(num_nodes_, false);
            std::deque<NodeId> queue{source_};
            seen[source_] = true;
            while (!queue.empty() && !seen[sink_]) {
                NodeId u = queue.front();
                queue.pop_front();
                for (int e : head_[u]) {
                    const Edge& edge = edges_[e];
                    if (seen[edge.to] || edge.capacity - edge.flow <= 0) continue;
                    seen[edge.to] = true;
                    parent_edge[edge.to] = e;
                    queue.push_back(edge.to);
                }
            }
            if (!seen[sink_]) return total;
            Rational bottleneck(0);
            bool first = true;
            for (NodeId v = sink_; v != source_;) {
                const Edge& edge = edges_[parent_edge[v]];
                Rational residual = edge.capacity - edge.flow;
                if (first || residual < bottleneck) {
                    bottleneck = residual;
                    first = false;
                }
                v = edge.from;
            }
            for (NodeId v = sink_; v != source_;) {
                int e = parent_edge[v];
                edges_[e].flow += bottleneck;
                edges_[e ^ 1].flow -= bottleneck;
                v = edges_[e].from;
            }
            total += bottleneck;
        }
    }

    // Source side of a minimum cut, from residual reachability.
    std::set<NodeId> source_side() const {
        std::set<NodeId> side{source_};
        std::deque<NodeId> queue{source_};
        while (!queue.empty()) {
            NodeId u = queue.front();
            queue.pop_front();
            for (int e : head_[u]) {
                const Edge& edge = edges_[e];
                if (edge.capacity - edge.flow <= 0 || side.count(edge.to)) continue;
                side.insert(edge.to);
                queue.push_back(edge.to);
            }
        }
        return side;
    }

private:
    struct Edge {
        NodeId from;
        NodeId to;
        Rational capacity;
        Rational flow;
    };

    int num_nodes_;
    NodeId source_;
    NodeId sink_;
    std::vector<std::vector<int>> head_;
    std::vector<Edge> edges_;
};

}  // namespace

FdCapacityResult fd_capacity(const Network& network) {
    if (network.mode() != DuplexMode::FullDuplex) {
        throw std::invalid_argument("fd_capacity requires a full-duplex network");
    }
    FdCapacityResult result;
    result.value = Rational(0);

    auto links = useful_links(network);
    if (links.empty()) return result;

    // One activation fraction and one flow variable per link.
    LinearProgram lp;
    std::map<Link, int> fraction_var, flow_var;
    for (const auto& [link, cap] : links) {
        fraction_var[link] = lp.add_variable();
    }
    for (const auto& [link, cap] : links) {
        flow_var[link] = lp.add_variable(link.first == network.source() ? Rational(1)
                                                                        : Rational(0));
    }
    // flow <= fraction * capacity
    for (const auto& [link, cap] : links) {
        lp.add_le({{flow_var[link], Rational(1)}, {fraction_var[link], -cap}}, Rational(0));
    }
    // conservation at relays
    for (NodeId relay = 1; relay <= network.n_relays(); ++relay) {
        std::vector<std::pair<int, Rational>> terms;
        for (const auto& [link, cap] : links) {
            if (link.second == relay) terms.emplace_back(flow_var[link], Rational(1));
            if (link.first == relay) terms.emplace_back(flow_var[link], Rational(-1));
        }
        if (!terms.empty()) lp.add_eq(terms, Rational(0));
    }
    // transmit and receive time budgets
    for (NodeId node = 0; node <= network.n_relays(); ++node) {
        std::vector<std::pair<int, Rational>> terms;
        for (const auto& [link, cap] : links) {
            if (link.first == node) terms.emplace_back(fraction_var[link], Rational(1));
        }
        if (!terms.empty()) lp.add_le(terms, Rational(1));
    }
    for (NodeId node = 1; node <= network.n_relays() + 1; ++node) {
        std::vector<std::pair<int, Rational>> terms;
        for (const auto& [link, cap] : links) {
            if (link.second == node) terms.emplace_back(fraction_var[link], Rational(1));
        }
        if (!terms.empty()) lp.add_le(terms, Rational(1));
    }

    VertexSolution solution = solve_lp(lp);
    if (solution.status != LpStatus::Optimal) {
        throw std::logic_error("link flow LP must have an optimal vertex");
    }
    result.value = solution.objective_value;
    for (const auto& [link, var] : fraction_var) {
        if (solution.values[var] != 0) result.activation.fractions[link] = solution.values[var];
    }
    for (const auto& [link, var] : flow_var) {
        if (solution.values[var] != 0) result.flow.flows[link] = solution.values[var];
    }
    return result;
}

MinCutResult min_cut_value(const Network& network, const LinkActivation& activation) {
    MaxFlow flow(network.num_nodes(), network.source(), network.destination());
    for (const auto& [link, cap] : network.positive_links()) {
        Rational modified = activation.fraction(link) * cap;
        if (modified > 0) flow.add_edge(link.first, link.second, modified);
    }
    MinCutResult result;
    result.value = flow.run();
    auto side = flow.source_side();
    // Nodes with no residual path from the source but outside [0:N] cannot
    // appear in the reported cut set.
    for (NodeId node : side) {
        if (node <= network.n_relays()) result.cut.insert(node);
    }
    return result;
}

}  // namespace one21
