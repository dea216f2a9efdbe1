// JSON network documents and result serialization. Rationals travel as
// "p/q" strings so that exact values survive round trips; decimal capacity
// strings are rationalized on load with the document's epsilon.
#pragma once

#include "one21/model.hpp"
#include "one21/scheduler.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace one21 {

struct NetworkDocument {
    int n_relays = 0;
    DuplexMode mode = DuplexMode::FullDuplex;
    Rational epsilon = Rational(1, 1000);  // truncation budget for decimal capacities

    struct LinkEntry {
        int from = 0;
        int to = 0;
        std::string capacity;  // "p/q", integer, or decimal
    };
    std::vector<LinkEntry> links;
};

// Throws ParseError with field diagnostics on malformed documents.
NetworkDocument parse_network_document(const std::string& text);
NetworkDocument network_document_from_json(const nlohmann::json& doc);

// Builds and validates the network; decimal capacities are truncated from
// below to within epsilon/(N+1)^2. Throws ParseError when validation fails.
Network to_network(const NetworkDocument& document);

nlohmann::json schedule_to_json(const Schedule& schedule);
Schedule schedule_from_json(const nlohmann::json& doc);

nlohmann::json flow_to_json(const LinkFlow& flow);
nlohmann::json activation_to_json(const LinkActivation& activation);

}  // namespace one21
