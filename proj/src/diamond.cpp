#include "one21/diamond.hpp"

#include "one21/lp.hpp"

#include <stdexcept>

namespace one21 {

Network DiamondNetwork::to_network() const {
    Network network(n_relays(), mode);
    for (int relay = 1; relay <= n_relays(); ++relay) {
        if (ell(relay) > 0) network.add_link(0, relay, ell(relay));
        if (r(relay) > 0) network.add_link(relay, n_relays() + 1, r(relay));
    }
    return network;
}

std::optional<DiamondNetwork> diamond_from_network(const Network& network) {
    DiamondNetwork diamond;
    diamond.mode = network.mode();
    diamond.relays.assign(network.n_relays(), {Rational(0), Rational(0)});
    for (const auto& [link, cap] : network.positive_links()) {
        auto [from, to] = link;
        if (from == network.source() && to >= 1 && to <= network.n_relays()) {
            diamond.relays[to - 1].first = cap;
        } else if (to == network.destination() && from >= 1 && from <= network.n_relays()) {
            diamond.relays[from - 1].second = cap;
        } else {
            return std::nullopt;
        }
    }
    return diamond;
}

Rational relay_path_capacity(const DiamondNetwork& diamond, int relay) {
    const Rational& ell = diamond.ell(relay);
    const Rational& r = diamond.r(relay);
    if (ell == 0 || r == 0) return Rational(0);
    if (diamond.mode == DuplexMode::FullDuplex) return std::min(ell, r);
    return ell * r / (ell + r);
}

DiamondCapacityResult diamond_capacity(const DiamondNetwork& diamond) {
    DiamondCapacityResult result;
    result.value = Rational(0);
    result.x.assign(diamond.n_relays(), Rational(0));

    std::vector<int> active;  // relays with a usable two-hop path
    for (int relay = 1; relay <= diamond.n_relays(); ++relay) {
        if (relay_path_capacity(diamond, relay) > 0) active.push_back(relay);
    }
    if (active.empty()) return result;

    LinearProgram lp;
    for (int relay : active) {
        lp.add_variable(relay_path_capacity(diamond, relay));
    }
    std::vector<std::pair<int, Rational>> source_row, destination_row;
    for (std::size_t k = 0; k < active.size(); ++k) {
        Rational capacity = relay_path_capacity(diamond, active[k]);
        source_row.emplace_back(static_cast<int>(k), capacity / diamond.ell(active[k]));
        destination_row.emplace_back(static_cast<int>(k), capacity / diamond.r(active[k]));
    }
    lp.add_le(source_row, Rational(1));
    lp.add_le(destination_row, Rational(1));
    if (diamond.mode == DuplexMode::HalfDuplex) {
        // The harmonic path capacities leave x <= 1 unimplied, so the box
        // rows are real constraints here. In full-duplex they are implied by
        // the two budget rows and are left out, which is what caps optimal
        // vertices at two active relays.
        for (std::size_t k = 0; k < active.size(); ++k) {
            lp.add_le({{static_cast<int>(k), Rational(1)}}, Rational(1));
        }
    }

    VertexSolution vertex = solve_lp(lp);
    if (vertex.status != LpStatus::Optimal) {
        throw std::logic_error("diamond path LP must have an optimal vertex");
    }
    result.value = vertex.objective_value;
    for (std::size_t k = 0; k < active.size(); ++k) {
        result.x[active[k] - 1] = vertex.values[k];
    }
    return result;
}

namespace {

std::set<int> support(const std::vector<Rational>& x) {
    std::set<int> relays;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k] > 0) relays.insert(static_cast<int>(k) + 1);
    }
    return relays;
}

}  // namespace

std::set<int> fd_relay_selection(const DiamondNetwork& diamond) {
    if (diamond.mode != DuplexMode::FullDuplex) {
        throw std::invalid_argument("fd_relay_selection requires full-duplex");
    }
    return support(diamond_capacity(diamond).x);
}

std::set<int> hd_relay_selection(const DiamondNetwork& diamond) {
    if (diamond.mode != DuplexMode::HalfDuplex) {
        throw std::invalid_argument("hd_relay_selection requires half-duplex");
    }
    return support(diamond_capacity(diamond).x);
}

HdActivation hd_activation_from_vertex(const DiamondNetwork& diamond,
                                       const std::vector<Rational>& x) {
    HdActivation activation;
    activation.per_relay.assign(diamond.n_relays(), {Rational(0), Rational(0)});
    for (int relay = 1; relay <= diamond.n_relays(); ++relay) {
        if (x[relay - 1] == 0 || relay_path_capacity(diamond, relay) == 0) continue;
        Rational total = diamond.ell(relay) + diamond.r(relay);
        activation.per_relay[relay - 1] = {x[relay - 1] * diamond.r(relay) / total,
                                           x[relay - 1] * diamond.ell(relay) / total};
    }
    return activation;
}

P4Result solve_p4(const DiamondNetwork& diamond) {
    if (diamond.mode != DuplexMode::HalfDuplex) {
        throw std::invalid_argument("the schedule LP applies to half-duplex diamonds");
    }
    P4Result result;
    result.value = Rational(0);
    result.activation.per_relay.assign(diamond.n_relays(), {Rational(0), Rational(0)});

    std::vector<int> active;
    for (int relay = 1; relay <= diamond.n_relays(); ++relay) {
        if (relay_path_capacity(diamond, relay) > 0) active.push_back(relay);
    }
    if (active.empty()) return result;

    LinearProgram lp;
    std::vector<int> source_var, destination_var;
    for (int relay : active) {
        source_var.push_back(lp.add_variable(diamond.ell(relay)));
        destination_var.push_back(lp.add_variable());
    }
    std::vector<std::pair<int, Rational>> source_budget, destination_budget;
    for (std::size_t k = 0; k < active.size(); ++k) {
        // flow balance: share_l * ell == share_r * r
        lp.add_eq({{source_var[k], diamond.ell(active[k])},
                   {destination_var[k], -diamond.r(active[k])}},
                  Rational(0));
        // half-duplex: the relay's two links must share its time
        lp.add_le({{source_var[k], Rational(1)}, {destination_var[k], Rational(1)}},
                  Rational(1));
        source_budget.emplace_back(source_var[k], Rational(1));
        destination_budget.emplace_back(destination_var[k], Rational(1));
    }
    lp.add_le(source_budget, Rational(1));
    lp.add_le(destination_budget, Rational(1));

    VertexSolution vertex = solve_lp(lp);
    if (vertex.status != LpStatus::Optimal) {
        throw std::logic_error("diamond schedule LP must have an optimal vertex");
    }
    result.value = vertex.objective_value;
    for (std::size_t k = 0; k < active.size(); ++k) {
        result.activation.per_relay[active[k] - 1] = {vertex.values[source_var[k]],
                                                      vertex.values[destination_var[k]]};
    }
    return result;
}

std::optional<int> find_pivot_relay(const HdActivation& activation) {
    for (std::size_t k = 0; k < activation.per_relay.size(); ++k) {
        if (activation.per_relay[k].first + activation.per_relay[k].second == 1) {
            return static_cast<int>(k) + 1;
        }
    }
    return std::nullopt;
}

Schedule hd_schedule(const DiamondNetwork& diamond) {
    if (diamond.mode != DuplexMode::HalfDuplex) {
        throw std::invalid_argument("hd_schedule applies to half-duplex diamonds");
    }
    DiamondCapacityResult optimum = diamond_capacity(diamond);
    if (optimum.value == 0) {
        return make_schedule({});
    }
    HdActivation activation = hd_activation_from_vertex(diamond, optimum.x);
    auto pivot = find_pivot_relay(activation);
    if (!pivot) {
        throw std::logic_error("optimal vertex lacks a fully busy relay");
    }
    const int i = *pivot;
    const NodeId destination = diamond.n_relays() + 1;

    std::vector<std::pair<NetworkState, Rational>> entries;
    Rational others_source(0), others_destination(0);
    for (int relay = 1; relay <= diamond.n_relays(); ++relay) {
        if (relay == i) continue;
        Rational to_relay = activation.source_share(relay);
        if (to_relay > 0) {
            // source feeds this relay while the pivot drains to the destination
            entries.push_back({NetworkState{{{0, relay}, {i, destination}}}, to_relay});
            others_source += to_relay;
        }
        Rational from_relay = activation.destination_share(relay);
        if (from_relay > 0) {
            entries.push_back({NetworkState{{{0, i}, {relay, destination}}}, from_relay});
            others_destination += from_relay;
        }
    }
    Rational pivot_drain = activation.destination_share(i) - others_source;
    if (pivot_drain > 0) {
        entries.push_back({NetworkState{{{i, destination}}}, pivot_drain});
    }
    Rational pivot_fill = activation.source_share(i) - others_destination;
    if (pivot_fill > 0) {
        entries.push_back({NetworkState{{{0, i}}}, pivot_fill});
    }
    Rational raw_total(0);
    for (const auto& [state, duration] : entries) raw_total += duration;
    if (raw_total != 1) {
        throw std::logic_error("half-duplex schedule must cover the full time on its own");
    }
    return make_schedule(std::move(entries));
}

LinkFlow diamond_flow(const DiamondNetwork& diamond, const std::vector<Rational>& x) {
    LinkFlow flow;
    const NodeId destination = diamond.n_relays() + 1;
    for (int relay = 1; relay <= diamond.n_relays(); ++relay) {
        Rational f = x[relay - 1] * relay_path_capacity(diamond, relay);
        if (f > 0) {
            flow.flows[{0, relay}] = f;
            flow.flows[{relay, destination}] = f;
        }
    }
    return flow;
}

BestRelayGuarantee best_relay_guarantee(const DiamondNetwork& diamond) {
    if (diamond.n_relays() == 0) {
        throw std::invalid_argument("diamond without relays");
    }
    BestRelayGuarantee guarantee;
    guarantee.best_capacity = Rational(0);
    for (int relay = 1; relay <= diamond.n_relays(); ++relay) {
        Rational capacity = relay_path_capacity(diamond, relay);
        if (guarantee.relay == 0 || capacity > guarantee.best_capacity) {
            guarantee.relay = relay;
            guarantee.best_capacity = capacity;
        }
    }
    Rational value = diamond_capacity(diamond).value;
    guarantee.ratio = value == 0 ? Rational(1) : guarantee.best_capacity / value;
    return guarantee;
}

}  // namespace one21
