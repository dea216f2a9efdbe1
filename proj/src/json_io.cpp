#include "one21/json_io.hpp"

#include "one21/errors.hpp"

namespace one21 {

namespace {

Rational parse_capacity(const NetworkDocument& document, const std::string& text) {
    auto value = try_parse_rational(text);
    if (!value) {
        throw ParseError("link capacity '" + text + "' is not a number");
    }
    if (text.find('.') == std::string::npos) {
        return *value;  // already exact
    }
    Rational per_link_error =
        document.epsilon / Rational((document.n_relays + 1) * (document.n_relays + 1));
    return truncate_below(*value, per_link_error);
}

}  // namespace

NetworkDocument network_document_from_json(const nlohmann::json& doc) {
    NetworkDocument document;
    try {
        document.n_relays = doc.at("n_relays").get<int>();
        std::string mode = doc.at("mode").get<std::string>();
        if (mode == "fd") {
            document.mode = DuplexMode::FullDuplex;
        } else if (mode == "hd") {
            document.mode = DuplexMode::HalfDuplex;
        } else {
            throw ParseError("mode must be \"fd\" or \"hd\", got \"" + mode + "\"");
        }
        if (doc.contains("epsilon")) {
            auto epsilon = try_parse_rational(doc.at("epsilon").get<std::string>());
            if (!epsilon || *epsilon <= 0) {
                throw ParseError("epsilon must be a positive rational string");
            }
            document.epsilon = *epsilon;
        }
        for (const auto& entry : doc.value("links", nlohmann::json::array())) {
            NetworkDocument::LinkEntry link;
            link.from = entry.at("from").get<int>();
            link.to = entry.at("to").get<int>();
            link.capacity = entry.at("capacity").get<std::string>();
            document.links.push_back(std::move(link));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed network document: ") + e.what());
    }
    return document;
}

NetworkDocument parse_network_document(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return network_document_from_json(doc);
}

Network to_network(const NetworkDocument& document) {
    if (document.n_relays < 0) {
        throw ParseError("n_relays must be nonnegative");
    }
    Network network(document.n_relays, document.mode);
    for (const auto& entry : document.links) {
        if (entry.from < 0 || entry.from > network.destination() || entry.to < 0 ||
            entry.to > network.destination()) {
            throw ParseError("link (" + std::to_string(entry.from) + "," +
                             std::to_string(entry.to) + ") outside [0 : N+1]");
        }
        network.add_link(entry.from, entry.to, parse_capacity(document, entry.capacity));
    }
    auto violations = validate(network);
    if (!violations.empty()) {
        std::string message = "invalid network:";
        for (const auto& violation : violations) message += "\n  " + violation;
        throw ParseError(message);
    }
    return network;
}

nlohmann::json schedule_to_json(const Schedule& schedule) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [state, duration] : schedule.entries) {
        nlohmann::json links = nlohmann::json::array();
        for (const auto& [from, to] : state.active_links) {
            links.push_back({from, to});
        }
        entries.push_back({{"duration", format_rational(duration)},
                           {"active_links", std::move(links)}});
    }
    return entries;
}

Schedule schedule_from_json(const nlohmann::json& doc) {
    std::vector<std::pair<NetworkState, Rational>> entries;
    try {
        for (const auto& entry : doc) {
            NetworkState state;
            for (const auto& link : entry.at("active_links")) {
                state.active_links.insert({link.at(0).get<int>(), link.at(1).get<int>()});
            }
            auto duration = try_parse_rational(entry.at("duration").get<std::string>());
            if (!duration) {
                throw ParseError("schedule duration is not a rational string");
            }
            entries.emplace_back(std::move(state), *duration);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed schedule document: ") + e.what());
    }
    return make_schedule(std::move(entries));
}

namespace {

nlohmann::json link_map_to_json(const std::map<Link, Rational>& values) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [link, value] : values) {
        entries.push_back(
            {{"from", link.first}, {"to", link.second}, {"value", format_rational(value)}});
    }
    return entries;
}

}  // namespace

nlohmann::json flow_to_json(const LinkFlow& flow) {
    return link_map_to_json(flow.flows);
}

nlohmann::json activation_to_json(const LinkActivation& activation) {
    return link_map_to_json(activation.fractions);
}

}  // namespace one21
