#include "one21/oracle.hpp"

#include "one21/errors.hpp"
#include "one21/lp.hpp"

#include <stdexcept>

namespace one21 {

namespace {

// Recursive matching extension over the canonical (sorted) link order. Each
// link is either skipped or added when compatible with the partial state.
void extend_state(const std::vector<Link>& links, std::size_t next, DuplexMode mode,
                  int n_relays, std::vector<Link>& current, std::vector<bool>& tx_busy,
                  std::vector<bool>& rx_busy, std::vector<NetworkState>& out,
                  std::size_t max_states) {
    if (next == links.size()) {
        NetworkState state;
        state.active_links.insert(current.begin(), current.end());
        out.push_back(std::move(state));
        if (out.size() > max_states) {
            throw SizeLimitError("state enumeration exceeds " + std::to_string(max_states) +
                                 " states");
        }
        return;
    }
    extend_state(links, next + 1, mode, n_relays, current, tx_busy, rx_busy, out, max_states);

    auto [from, to] = links[next];
    bool compatible = !tx_busy[from] && !rx_busy[to];
    if (compatible && mode == DuplexMode::HalfDuplex) {
        bool from_is_relay = from >= 1 && from <= n_relays;
        bool to_is_relay = to >= 1 && to <= n_relays;
        if (from_is_relay && rx_busy[from]) compatible = false;
        if (to_is_relay && tx_busy[to]) compatible = false;
    }
    if (!compatible) return;

    tx_busy[from] = rx_busy[to] = true;
    current.push_back(links[next]);
    extend_state(links, next + 1, mode, n_relays, current, tx_busy, rx_busy, out, max_states);
    current.pop_back();
    tx_busy[from] = rx_busy[to] = false;
}

}  // namespace

StateSpace enumerate_states(const Network& network, std::size_t max_states) {
    std::vector<Link> links;
    for (const auto& [link, cap] : network.positive_links()) links.push_back(link);

    StateSpace space;
    std::vector<Link> current;
    std::vector<bool> tx_busy(network.num_nodes(), false), rx_busy(network.num_nodes(), false);
    extend_state(links, 0, network.mode(), network.n_relays(), current, tx_busy, rx_busy,
                 space.states, max_states);
    return space;
}

BruteForceResult brute_force_capacity(const Network& network, std::size_t max_states) {
    StateSpace space = enumerate_states(network, max_states);
    auto links = network.positive_links();

    LinearProgram lp;
    std::vector<int> state_var;
    state_var.reserve(space.states.size());
    for (std::size_t s = 0; s < space.states.size(); ++s) {
        state_var.push_back(lp.add_variable());
    }
    std::map<Link, int> flow_var;
    for (const auto& [link, cap] : links) {
        flow_var[link] = lp.add_variable(link.first == network.source() ? Rational(1)
                                                                        : Rational(0));
    }

    // flow on a link <= capacity * (total share of states activating it)
    for (const auto& [link, cap] : links) {
        std::vector<std::pair<int, Rational>> terms{{flow_var[link], Rational(1)}};
        for (std::size_t s = 0; s < space.states.size(); ++s) {
            if (space.states[s].contains(link)) terms.emplace_back(state_var[s], -cap);
        }
        lp.add_le(terms, Rational(0));
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
    // time shares form a distribution
    {
        std::vector<std::pair<int, Rational>> terms;
        for (int var : state_var) terms.emplace_back(var, Rational(1));
        lp.add_le(terms, Rational(1));
    }

    VertexSolution solution = solve_lp(lp);
    if (solution.status != LpStatus::Optimal) {
        throw std::logic_error("state LP must have an optimal vertex");
    }

    std::vector<std::pair<NetworkState, Rational>> entries;
    for (std::size_t s = 0; s < space.states.size(); ++s) {
        if (solution.values[state_var[s]] > 0) {
            entries.emplace_back(space.states[s], solution.values[state_var[s]]);
        }
    }
    return {solution.objective_value, make_schedule(std::move(entries))};
}

Rational exhaustive_min_cut(const Network& network, const Schedule& schedule) {
    if (network.n_relays() > 20) {
        throw SizeLimitError("cut enumeration limited to 20 relays");
    }
    std::map<Link, Rational> weighted;
    for (const auto& [link, cap] : network.positive_links()) {
        Rational share = schedule.coverage(link);
        if (share > 0) weighted[link] = share * cap;
    }

    const int n = network.n_relays();
    Rational best(0);
    bool first = true;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        auto in_cut = [&](NodeId node) {
            if (node == network.source()) return true;
            if (node == network.destination()) return false;
            return ((mask >> (node - 1)) & 1ul) != 0;
        };
        Rational value(0);
        for (const auto& [link, weight] : weighted) {
            if (in_cut(link.first) && !in_cut(link.second)) value += weight;
        }
        if (first || value < best) {
            best = value;
            first = false;
        }
    }
    return best;
}

}  // namespace one21
