#include "one21/scheduler.hpp"

#include "one21/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace one21 {

Rational Schedule::total_duration() const {
    Rational total(0);
    for (const auto& [state, duration] : entries) total += duration;
    return total;
}

Rational Schedule::coverage(const Link& link) const {
    Rational total(0);
    for (const auto& [state, duration] : entries) {
        if (state.contains(link)) total += duration;
    }
    return total;
}

Schedule make_schedule(std::vector<std::pair<NetworkState, Rational>> raw) {
    Schedule schedule;
    std::map<NetworkState, std::size_t> index_of;
    for (auto& [state, duration] : raw) {
        if (duration < 0) throw std::invalid_argument("negative schedule duration");
        if (duration == 0) continue;
        auto [it, inserted] = index_of.try_emplace(state, schedule.entries.size());
        if (inserted) {
            schedule.entries.emplace_back(std::move(state), duration);
        } else {
            schedule.entries[it->second].second += duration;
        }
    }
    Rational total = schedule.total_duration();
    if (total > 1) throw std::invalid_argument("schedule durations exceed 1");
    if (total < 1) schedule.entries.emplace_back(NetworkState{}, Rational(1) - total);
    return schedule;
}

std::vector<std::string> validate_state(const NetworkState& state, const Network& network) {
    std::vector<std::string> violations;
    std::map<NodeId, int> transmitting, receiving;
    for (const auto& [from, to] : state.active_links) {
        ++transmitting[from];
        ++receiving[to];
        if (network.capacity(from, to) <= 0) {
            violations.push_back("link (" + std::to_string(from) + "," + std::to_string(to) +
                                 ") is not a positive-capacity link of the network");
        }
    }
    for (const auto& [node, count] : transmitting) {
        if (count > 1) violations.push_back("node " + std::to_string(node) + " transmits twice");
    }
    for (const auto& [node, count] : receiving) {
        if (count > 1) violations.push_back("node " + std::to_string(node) + " receives twice");
    }
    if (network.mode() == DuplexMode::HalfDuplex) {
        for (NodeId relay = 1; relay <= network.n_relays(); ++relay) {
            if (transmitting.count(relay) && receiving.count(relay)) {
                violations.push_back("relay " + std::to_string(relay) +
                                     " transmits and receives");
            }
        }
    }
    return violations;
}

namespace {

// Perfect matching on the support of a square nonnegative matrix whose rows
// and columns all sum to the same positive value; exists by Hall's theorem.
// Kuhn's augmenting paths with ascending vertex order keep the result
// deterministic.
class SupportMatcher {
public:
    explicit SupportMatcher(const std::vector<std::vector<Rational>>& matrix)
        : matrix_(matrix), size_(static_cast<int>(matrix.size())) {}

    std::vector<int> find_perfect_matching() {
        match_of_column_.assign(size_, -1);
        for (int row = 0; row < size_; ++row) {
            visited_.assign(size_, false);
            if (!augment(row)) {
                throw std::logic_error("support of a doubly stochastic matrix lost its matching");
            }
        }
        std::vector<int> match_of_row(size_, -1);
        for (int col = 0; col < size_; ++col) {
            if (match_of_column_[col] >= 0) match_of_row[match_of_column_[col]] = col;
        }
        return match_of_row;
    }

private:
    bool augment(int row) {
        for (int col = 0; col < size_; ++col) {
            if (visited_[col] || matrix_[row][col] == 0) continue;
            visited_[col] = true;
            if (match_of_column_[col] < 0 || augment(match_of_column_[col])) {
                match_of_column_[col] = row;
                return true;
            }
        }
        return false;
    }

    const std::vector<std::vector<Rational>>& matrix_;
    int size_;
    std::vector<int> match_of_column_;
    std::vector<bool> visited_;
};

}  // namespace

namespace detail {

// Permutation matrices with the unit weight-sum constraint live in an affine
// space of dimension (K-1)^2, so any affinely dependent family can be
// thinned without changing the weighted sum.
void reduce_matching_family(std::vector<WeightedMatching>& parts, int size,
                            std::size_t target) {
    auto as_vector = [&](const WeightedMatching& part) {
        std::vector<Rational> v(size * size + 1, Rational(0));
        for (int i = 0; i < size; ++i) v[i * size + part.match[i]] = 1;
        v[size * size] = 1;
        return v;
    };

    while (parts.size() > target) {
        // Incremental elimination over the rows v_k with coefficient
        // tracking; the first row that reduces to zero yields a dependency.
        std::vector<std::vector<Rational>> pivot_rows;
        std::vector<std::vector<Rational>> pivot_coeffs;
        std::vector<int> pivot_cols;
        std::vector<Rational> dependency;
        for (std::size_t k = 0; k < parts.size() && dependency.empty(); ++k) {
            std::vector<Rational> row = as_vector(parts[k]);
            std::vector<Rational> coeff(parts.size(), Rational(0));
            coeff[k] = 1;
            for (std::size_t p = 0; p < pivot_rows.size(); ++p) {
                const Rational factor = row[pivot_cols[p]];
                if (factor == 0) continue;
                for (std::size_t j = 0; j < row.size(); ++j) {
                    if (pivot_rows[p][j] != 0) row[j] -= factor * pivot_rows[p][j];
                }
                for (std::size_t j = 0; j < coeff.size(); ++j) {
                    if (pivot_coeffs[p][j] != 0) coeff[j] -= factor * pivot_coeffs[p][j];
                }
            }
            int lead = -1;
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (row[j] != 0) {
                    lead = static_cast<int>(j);
                    break;
                }
            }
            if (lead < 0) {
                dependency = std::move(coeff);
            } else {
                const Rational inverse = Rational(1) / row[lead];
                for (auto& v : row) v *= inverse;
                for (auto& v : coeff) v *= inverse;
                pivot_rows.push_back(std::move(row));
                pivot_coeffs.push_back(std::move(coeff));
                pivot_cols.push_back(lead);
            }
        }
        if (dependency.empty()) break;

        bool has_positive = std::any_of(dependency.begin(), dependency.end(),
                                        [](const Rational& a) { return a > 0; });
        if (!has_positive) {
            for (auto& a : dependency) a = -a;
        }
        Rational step(0);
        bool first = true;
        for (std::size_t k = 0; k < parts.size(); ++k) {
            if (dependency[k] <= 0) continue;
            Rational candidate = parts[k].weight / dependency[k];
            if (first || candidate < step) {
                step = candidate;
                first = false;
            }
        }
        std::vector<WeightedMatching> kept;
        for (std::size_t k = 0; k < parts.size(); ++k) {
            Rational weight = parts[k].weight - step * dependency[k];
            if (weight > 0) {
                kept.push_back({weight, std::move(parts[k].match)});
            }
        }
        parts = std::move(kept);
    }
}

}  // namespace detail

namespace {
using detail::WeightedMatching;
}  // namespace

Schedule bvn_schedule(const LinkActivation& activation, int n_relays) {
    auto violations = validate_activation(activation, n_relays);
    if (!violations.empty()) {
        throw std::invalid_argument("activation violates budgets: " + violations.front());
    }
    const int size = n_relays + 2;

    std::vector<std::vector<Rational>> matrix(size, std::vector<Rational>(size, Rational(0)));
    for (const auto& [link, fraction] : activation.fractions) {
        matrix[link.first][link.second] += fraction;
    }

    // Pad to doubly stochastic: spread the missing row/column mass over
    // arbitrary cells; those cells act as idle beams in the emitted states.
    std::vector<Rational> row_deficit(size), col_deficit(size);
    for (int i = 0; i < size; ++i) {
        Rational row_sum(0), col_sum(0);
        for (int j = 0; j < size; ++j) {
            row_sum += matrix[i][j];
            col_sum += matrix[j][i];
        }
        row_deficit[i] = Rational(1) - row_sum;
        col_deficit[i] = Rational(1) - col_sum;
    }
    for (int i = 0, j = 0; i < size && j < size;) {
        if (row_deficit[i] == 0) {
            ++i;
            continue;
        }
        if (col_deficit[j] == 0) {
            ++j;
            continue;
        }
        Rational delta = std::min(row_deficit[i], col_deficit[j]);
        matrix[i][j] += delta;
        row_deficit[i] -= delta;
        col_deficit[j] -= delta;
    }

    std::vector<WeightedMatching> parts;
    Rational remaining(1);
    while (remaining > 0) {
        std::vector<int> match = SupportMatcher(matrix).find_perfect_matching();
        Rational weight = matrix[0][match[0]];
        for (int i = 1; i < size; ++i) weight = std::min(weight, matrix[i][match[i]]);
        for (int i = 0; i < size; ++i) matrix[i][match[i]] -= weight;
        parts.push_back({weight, std::move(match)});
        remaining -= weight;
    }

    const std::size_t state_bound = static_cast<std::size_t>(size) * size - 2 * size + 2;
    if (parts.size() > state_bound) {
        detail::reduce_matching_family(parts, size, state_bound);
    }
    if (parts.size() > state_bound) {
        throw std::logic_error("state decomposition exceeds its size bound");
    }

    std::vector<std::pair<NetworkState, Rational>> entries;
    for (const auto& part : parts) {
        NetworkState state;
        for (int i = 0; i < size; ++i) {
            Link link{i, part.match[i]};
            auto it = activation.fractions.find(link);
            if (it != activation.fractions.end() && it->second > 0) {
                state.active_links.insert(link);
            }
        }
        entries.emplace_back(std::move(state), part.weight);
    }
    return make_schedule(std::move(entries));
}

namespace {

struct MultigraphEdge {
    NodeId tx;
    NodeId rx;
    int color = -1;
};

}  // namespace

LcmColoring lcm_coloring(const LinkActivation& activation, long long max_multigraph_edges) {
    int max_node = 0;
    Integer lcm_den(1);
    std::size_t positive_links = 0;
    for (const auto& [link, fraction] : activation.fractions) {
        if (fraction < 0) throw std::invalid_argument("negative activation fraction");
        if (fraction == 0) continue;
        ++positive_links;
        max_node = std::max({max_node, link.first, link.second});
        lcm_den = lcm(lcm_den, denom(fraction));
    }
    {
        auto violations = validate_activation(activation, max_node > 0 ? max_node - 1 : 0);
        if (!violations.empty()) {
            throw std::invalid_argument("activation violates budgets: " + violations.front());
        }
    }
    if (positive_links == 0) {
        return {make_schedule({}), Integer(1), 0};
    }
    if (lcm_den * Integer(positive_links) > Integer(max_multigraph_edges)) {
        throw SizeLimitError(
            "LCM multigraph would have more than " + std::to_string(max_multigraph_edges) +
            " edges (common denominator " + lcm_den.str() + "); use the matching decomposition");
    }

    std::vector<MultigraphEdge> edges;
    for (const auto& [link, fraction] : activation.fractions) {
        if (fraction == 0) continue;
        Integer copies = lcm_den / denom(fraction) * numer(fraction);
        for (Integer c = 0; c < copies; ++c) edges.push_back({link.first, link.second, -1});
    }

    const int nodes = max_node + 1;
    std::vector<long long> tx_degree(nodes, 0), rx_degree(nodes, 0);
    for (const auto& edge : edges) {
        ++tx_degree[edge.tx];
        ++rx_degree[edge.rx];
    }
    long long delta = 0;
    for (int v = 0; v < nodes; ++v) delta = std::max({delta, tx_degree[v], rx_degree[v]});

    // Bipartite edge coloring with Delta colors: pick colors missing at both
    // endpoints, flipping an a/b alternating path when they disagree.
    std::vector<std::vector<int>> tx_slot(nodes, std::vector<int>(delta, -1));
    std::vector<std::vector<int>> rx_slot(nodes, std::vector<int>(delta, -1));
    auto first_free = [&](const std::vector<int>& slots) {
        for (std::size_t c = 0; c < slots.size(); ++c) {
            if (slots[c] < 0) return static_cast<int>(c);
        }
        throw std::logic_error("no free color below the maximum degree");
    };
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const int a = first_free(tx_slot[edges[e].tx]);
        const int b = first_free(rx_slot[edges[e].rx]);
        int color = a;
        if (a != b) {
            // Walk from the receive endpoint along colors a, b, a, ...; the
            // walk never reaches the transmit endpoint, so after swapping,
            // color a is free on both sides.
            std::vector<int> path;
            int vertex = edges[e].rx;
            bool at_rx = true;
            int want = a;
            for (;;) {
                const int next = at_rx ? rx_slot[vertex][want] : tx_slot[vertex][want];
                if (next < 0) break;
                path.push_back(next);
                vertex = at_rx ? edges[next].tx : edges[next].rx;
                at_rx = !at_rx;
                want = want == a ? b : a;
            }
            for (int pe : path) {
                tx_slot[edges[pe].tx][edges[pe].color] = -1;
                rx_slot[edges[pe].rx][edges[pe].color] = -1;
                edges[pe].color = edges[pe].color == a ? b : a;
            }
            for (int pe : path) {
                tx_slot[edges[pe].tx][edges[pe].color] = static_cast<int>(pe);
                rx_slot[edges[pe].rx][edges[pe].color] = static_cast<int>(pe);
            }
        }
        edges[e].color = color;
        tx_slot[edges[e].tx][color] = static_cast<int>(e);
        rx_slot[edges[e].rx][color] = static_cast<int>(e);
    }

    std::vector<std::pair<NetworkState, Rational>> entries(delta);
    const Rational share = Rational(1) / Rational(Integer(delta));
    for (auto& [state, duration] : entries) duration = share;
    for (const auto& edge : edges) {
        entries[edge.color].first.active_links.insert({edge.tx, edge.rx});
    }
    return {make_schedule(std::move(entries)), lcm_den, delta};
}

Schedule lcm_coloring_schedule(const LinkActivation& activation, long long max_multigraph_edges) {
    return lcm_coloring(activation, max_multigraph_edges).schedule;
}

SimulationResult simulate(const Network& network, const Schedule& schedule,
                          const LinkFlow& flow) {
    SimulationResult result;
    for (const auto& [state, duration] : schedule.entries) {
        if (duration < 0) result.violations.push_back("negative duration");
        for (auto& violation : validate_state(state, network)) {
            result.violations.push_back("invalid state: " + violation);
        }
    }
    if (schedule.total_duration() != 1) {
        result.violations.push_back("durations sum to " +
                                    format_rational(schedule.total_duration()) + ", not 1");
    }
    for (NodeId relay = 1; relay <= network.n_relays(); ++relay) {
        Rational in(0), out(0);
        for (const auto& [link, f] : flow.flows) {
            if (link.second == relay) in += f;
            if (link.first == relay) out += f;
        }
        if (in != out) {
            result.violations.push_back("flow not conserved at relay " + std::to_string(relay));
        }
    }
    for (const auto& [link, f] : flow.flows) {
        if (f < 0) {
            result.violations.push_back("negative flow on link (" + std::to_string(link.first) +
                                        "," + std::to_string(link.second) + ")");
            continue;
        }
        if (f == 0) continue;
        Rational budget = schedule.coverage(link) * network.capacity(link.first, link.second);
        if (f > budget) {
            result.violations.push_back(
                "link (" + std::to_string(link.first) + "," + std::to_string(link.second) +
                "): flow " + format_rational(f) + " exceeds scheduled budget " +
                format_rational(budget) + " (deficit " + format_rational(f - budget) + ")");
        }
    }
    Rational rate(0);
    for (const auto& [link, f] : flow.flows) {
        if (link.first == network.source()) rate += f;
    }
    result.rate = rate;
    result.ok = result.violations.empty();
    return result;
}

}  // namespace one21
