#include "one21/model.hpp"

#include <cmath>
#include <stdexcept>

namespace one21 {

std::string to_string(DuplexMode mode) {
    return mode == DuplexMode::FullDuplex ? "fd" : "hd";
}

Network::Network(int n_relays, DuplexMode mode) : n_relays_(n_relays), mode_(mode) {
    if (n_relays < 0) {
        throw std::invalid_argument("negative relay count");
    }
}

void Network::add_link(NodeId from, NodeId to, const Rational& capacity) {
    if (from < 0 || from > destination() || to < 0 || to > destination()) {
        throw std::out_of_range("link endpoint outside [0 : N+1]");
    }
    links_[{from, to}] = capacity;
}

bool Network::has_link(NodeId from, NodeId to) const {
    return links_.count({from, to}) > 0;
}

Rational Network::capacity(NodeId from, NodeId to) const {
    auto it = links_.find({from, to});
    return it == links_.end() ? Rational(0) : it->second;
}

std::map<Link, Rational> Network::positive_links() const {
    std::map<Link, Rational> kept;
    for (const auto& [link, cap] : links_) {
        if (cap > 0) kept.insert({link, cap});
    }
    return kept;
}

std::vector<std::string> validate(const Network& network) {
    std::vector<std::string> violations;
    for (const auto& [link, cap] : network.links()) {
        auto [from, to] = link;
        std::string name = "(" + std::to_string(from) + "," + std::to_string(to) + ")";
        if (from == to) {
            violations.push_back("self-loop at node " + std::to_string(from));
        }
        if (to == network.source()) {
            violations.push_back("link " + name + " into the source");
        }
        if (from == network.destination()) {
            violations.push_back("link " + name + " out of the destination");
        }
        if (cap < 0) {
            violations.push_back("negative capacity on link " + name);
        }
    }
    return violations;
}

double link_capacity_from_channel(std::complex<double> gain, double power) {
    if (!std::isfinite(gain.real()) || !std::isfinite(gain.imag()) || !std::isfinite(power)) {
        throw std::invalid_argument("non-finite channel input");
    }
    if (power <= 0) {
        throw std::invalid_argument("power must be positive");
    }
    return std::log2(1.0 + power * std::norm(gain));
}

std::map<Link, double> real_capacities(const ChannelSpec& spec) {
    std::map<Link, double> capacities;
    for (const auto& [link, gain] : spec.gains) {
        capacities[link] = link_capacity_from_channel(gain, spec.power);
    }
    return capacities;
}

Network rationalize(const std::map<Link, double>& capacities, int n_relays,
                    DuplexMode mode, const Rational& epsilon) {
    if (epsilon <= 0) {
        throw std::invalid_argument("epsilon must be positive");
    }
    Rational per_link_error = epsilon / Rational((n_relays + 1) * (n_relays + 1));
    Network network(n_relays, mode);
    for (const auto& [link, value] : capacities) {
        if (!std::isfinite(value) || value < 0) {
            throw std::invalid_argument("link capacities must be finite and nonnegative");
        }
        network.add_link(link.first, link.second,
                         truncate_below(rational_from_double(value), per_link_error));
    }
    return network;
}

double gap(int n_relays, DuplexMode mode) {
    if (n_relays < 0) {
        throw std::invalid_argument("negative relay count");
    }
    double n = n_relays;
    double relay_states = mode == DuplexMode::FullDuplex ? (n + 1) * (n + 1) : 2 * n + 1;
    return (n + 1) * std::log2(std::exp(1.0)) + 2 * std::log2(n + 2) +
           n * std::log2(relay_states);
}

}  // namespace one21
