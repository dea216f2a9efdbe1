// Core domain model for 1-2-1 relay networks: a source (node 0), N relays
// and a destination (node N+1) joined by directed links whose rational
// capacities are bits per channel use. Relays run either full-duplex or
// half-duplex; a link is usable only while both endpoints point their beams
// at each other, which the scheduler modules turn into explicit time shares.
#pragma once

#include "one21/rational.hpp"

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace one21 {

using NodeId = int;
using Link = std::pair<NodeId, NodeId>;  // (from, to)

enum class DuplexMode { FullDuplex, HalfDuplex };

std::string to_string(DuplexMode mode);

// Directed labeled graph over nodes [0 : N+1]. Absent links have capacity 0.
// add_link range-checks node ids; structural problems (self-loops, links into
// the source, negative capacities, ...) are reported by validate() so that
// loaded documents can be diagnosed rather than rejected blindly.
class Network {
public:
    Network(int n_relays, DuplexMode mode);

    int n_relays() const { return n_relays_; }
    int num_nodes() const { return n_relays_ + 2; }
    NodeId source() const { return 0; }
    NodeId destination() const { return n_relays_ + 1; }
    DuplexMode mode() const { return mode_; }

    void add_link(NodeId from, NodeId to, const Rational& capacity);
    bool has_link(NodeId from, NodeId to) const;
    Rational capacity(NodeId from, NodeId to) const;  // 0 when absent
    const std::map<Link, Rational>& links() const { return links_; }

    // Links with capacity > 0; every LP in the library is built from these.
    std::map<Link, Rational> positive_links() const;

private:
    int n_relays_;
    DuplexMode mode_;
    std::map<Link, Rational> links_;
};

// Structural violations as human-readable strings; empty means valid.
std::vector<std::string> validate(const Network& network);

// Complex channel gains and a common transmit power, the raw inputs the
// capacity model starts from.
struct ChannelSpec {
    std::map<Link, std::complex<double>> gains;
    double power = 1.0;
};

// log2(1 + power * |gain|^2); throws std::invalid_argument on non-finite
// input or power <= 0.
double link_capacity_from_channel(std::complex<double> gain, double power);

// Point-to-point capacities of every specified link.
std::map<Link, double> real_capacities(const ChannelSpec& spec);

// Replaces real capacities l by rationals l_hat with
//   l_hat <= l <= l_hat + epsilon/(N+1)^2,
// obtained by truncating the decimal expansion from below. The approximate
// capacity of the result is then within epsilon below the real-valued one.
Network rationalize(const std::map<Link, double>& capacities, int n_relays,
                    DuplexMode mode, const Rational& epsilon);

// Constant gap between the approximate capacity and the true capacity:
//   (N+1)*log2(e) + 2*log2(N+2) + N*log2(card)
// with card = (N+1)^2 in full-duplex and 2N+1 in half-duplex.
double gap(int n_relays, DuplexMode mode);

}  // namespace one21
