#include "one21/cli.hpp"

#include "one21/capacity.hpp"
#include "one21/diamond.hpp"
#include "one21/errors.hpp"
#include "one21/json_io.hpp"
#include "one21/model.hpp"
#include "one21/oracle.hpp"
#include "one21/paths.hpp"
#include "one21/scheduler.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace one21 {

namespace {

struct CommonOptions {
    std::string file;
    std::string epsilon;
    bool json = false;
    std::size_t max_paths = 100000;
    std::size_t max_states = 100000;
};

Network load_network(const CommonOptions& options) {
    std::ifstream input(options.file);
    if (!input) {
        throw ParseError("cannot open '" + options.file + "'");
    }
    std::stringstream buffer;
    buffer << input.rdbuf();
    NetworkDocument document = parse_network_document(buffer.str());
    if (!options.epsilon.empty()) {
        auto epsilon = try_parse_rational(options.epsilon);
        if (!epsilon || *epsilon <= 0) {
            throw ParseError("--epsilon must be a positive rational");
        }
        document.epsilon = *epsilon;
    }
    return to_network(document);
}

std::string both_forms(const Rational& value) {
    return format_rational(value) + " (" + format_decimal(value) + ")";
}

std::string describe_path(const Path& path) {
    std::string text;
    for (std::size_t i = 0; i < path.nodes.size(); ++i) {
        if (i) text += "->";
        text += std::to_string(path.nodes[i]);
    }
    return text;
}

// Capacity plus the objects needed to print or verify a schedule.
struct Analysis {
    Rational capacity;
    std::string method;
    Schedule schedule;
    LinkFlow flow;
    bool has_schedule = false;
};

Analysis analyze(const Network& network, const CommonOptions& options, std::ostream& err,
                 bool need_schedule) {
    Analysis analysis;
    if (network.mode() == DuplexMode::FullDuplex) {
        FdCapacityResult fd = fd_capacity(network);
        analysis.capacity = fd.value;
        analysis.method = "link flow LP";
        if (need_schedule) {
            analysis.schedule = bvn_schedule(fd.activation, network.n_relays());
            analysis.flow = fd.flow;
            analysis.has_schedule = true;
        }
        return analysis;
    }
    if (auto diamond = diamond_from_network(network)) {
        DiamondCapacityResult result = diamond_capacity(*diamond);
        analysis.capacity = result.value;
        analysis.method = "diamond path LP";
        if (need_schedule) {
            analysis.schedule = hd_schedule(*diamond);
            analysis.flow = diamond_flow(*diamond, result.x);
            analysis.has_schedule = true;
        }
        return analysis;
    }
    if (need_schedule) {
        throw UnsupportedModeError(
            "schedules for half-duplex networks are only constructed for diamond "
            "topologies; this network has relay-to-relay links");
    }
    err << "note: general half-duplex topology, solving the exponential state LP "
        << "(up to " << options.max_states << " states)\n";
    BruteForceResult brute = brute_force_capacity(network, options.max_states);
    analysis.capacity = brute.value;
    analysis.method = "state LP (exhaustive)";
    return analysis;
}

int cmd_capacity(const CommonOptions& options, bool with_gap, std::ostream& out,
                 std::ostream& err) {
    Network network = load_network(options);
    Analysis analysis = analyze(network, options, err, /*need_schedule=*/false);
    double gap_value = gap(network.n_relays(), network.mode());

    if (options.json) {
        nlohmann::json doc{{"capacity", format_rational(analysis.capacity)},
                           {"capacity_decimal", to_double(analysis.capacity)},
                           {"method", analysis.method}};
        if (with_gap) {
            doc["gap"] = gap_value;
            doc["upper_bound_decimal"] = to_double(analysis.capacity) + gap_value;
        }
        out << doc.dump(2) << "\n";
        return 0;
    }
    out << "capacity = " << both_forms(analysis.capacity) << "\n";
    if (with_gap) {
        out << "gap      = " << gap_value << "\n";
        out << "the exact capacity lies in [" << format_decimal(analysis.capacity) << ", "
            << to_double(analysis.capacity) + gap_value << "]\n";
    }
    return 0;
}

int cmd_schedule(const CommonOptions& options, bool verify, std::ostream& out,
                 std::ostream& err) {
    Network network = load_network(options);
    Analysis analysis = analyze(network, options, err, /*need_schedule=*/true);

    SimulationResult verification;
    if (verify) {
        verification = simulate(network, analysis.schedule, analysis.flow);
        if (!verification.ok) {
            err << "schedule verification failed:\n";
            for (const auto& violation : verification.violations) {
                err << "  " << violation << "\n";
            }
            return 1;
        }
    }

    if (options.json) {
        nlohmann::json doc{{"capacity", format_rational(analysis.capacity)},
                           {"capacity_decimal", to_double(analysis.capacity)},
                           {"schedule", schedule_to_json(analysis.schedule)},
                           {"flow", flow_to_json(analysis.flow)}};
        if (verify) doc["verified_rate"] = format_rational(verification.rate);
        out << doc.dump(2) << "\n";
        return 0;
    }
    out << "capacity = " << both_forms(analysis.capacity) << "\n";
    out << "schedule (" << analysis.schedule.entries.size() << " states):\n";
    for (const auto& [state, duration] : analysis.schedule.entries) {
        out << "  " << format_rational(duration) << " (" << format_decimal(duration) << "): ";
        if (state.idle()) {
            out << "idle";
        } else {
            bool first = true;
            for (const auto& [from, to] : state.active_links) {
                if (!first) out << ", ";
                out << from << "->" << to;
                first = false;
            }
        }
        out << "\n";
    }
    if (verify) {
        out << "verified rate = " << both_forms(verification.rate) << "\n";
    }
    return 0;
}

int cmd_paths(const CommonOptions& options, std::ostream& out, std::ostream&) {
    Network network = load_network(options);
    if (network.mode() != DuplexMode::FullDuplex) {
        throw UnsupportedModeError("path analysis applies to full-duplex networks");
    }
    PathSolution solution = solve_p1(network, options.max_paths);
    SparsityReport report = sparsity_report(solution, network);
    auto widest = best_path(network);

    if (options.json) {
        nlohmann::json paths = nlohmann::json::array();
        for (std::size_t p = 0; p < solution.paths.size(); ++p) {
            if (solution.utilization[p] == 0) continue;
            paths.push_back({{"nodes", solution.paths[p].nodes},
                             {"utilization", format_rational(solution.utilization[p])},
                             {"capacity", format_rational(solution.paths[p].capacity)}});
        }
        nlohmann::json doc{{"capacity", format_rational(solution.value)},
                           {"paths", std::move(paths)},
                           {"active_paths", report.active_count},
                           {"sparsity_bound", report.bound}};
        if (report.two_layer) {
            doc["two_layer_bound"] = report.two_layer_bound;
            doc["two_layer_bound_holds"] = report.two_layer_ok;
        }
        if (widest) {
            doc["best_path"] = widest->nodes;
            doc["best_path_capacity"] = format_rational(widest->capacity);
        }
        out << doc.dump(2) << "\n";
        return 0;
    }

    out << "capacity = " << both_forms(solution.value) << "\n";
    out << "active paths (" << report.active_count << " of " << solution.paths.size()
        << " enumerated):\n";
    for (std::size_t p = 0; p < solution.paths.size(); ++p) {
        if (solution.utilization[p] == 0) continue;
        out << "  " << describe_path(solution.paths[p])
            << "  x = " << format_rational(solution.utilization[p])
            << "  path capacity = " << format_rational(solution.paths[p].capacity) << "\n";
    }
    out << "sparsity: " << report.active_count << " <= " << report.bound << " (2N+2) "
        << (report.ok ? "ok" : "VIOLATED") << "\n";
    if (report.two_layer) {
        out << "two-layer network: soft bound " << report.active_count
            << " <= " << report.two_layer_bound << " (2M+1) "
            << (report.two_layer_ok ? "holds" : "does not hold") << "\n";
    }
    if (widest) {
        out << "best path: " << describe_path(*widest) << " with capacity "
            << both_forms(widest->capacity);
        if (solution.value > 0) {
            out << ", share " << format_rational(widest->capacity / solution.value)
                << " >= 1/" << report.bound;
        }
        out << "\n";
    } else {
        out << "no source-destination path\n";
    }
    return 0;
}

int cmd_check(const CommonOptions& options, std::ostream& out, std::ostream&) {
    Network network = load_network(options);
    std::vector<std::pair<std::string, Rational>> values;

    if (network.mode() == DuplexMode::FullDuplex) {
        FdCapacityResult fd = fd_capacity(network);
        values.emplace_back("link flow LP", fd.value);
        values.emplace_back("path LP", solve_p1(network, options.max_paths).value);
        values.emplace_back("state LP (exhaustive)",
                            brute_force_capacity(network, options.max_states).value);
        values.emplace_back("min cut of the optimal activation",
                            min_cut_value(network, fd.activation).value);
    } else if (auto diamond = diamond_from_network(network)) {
        values.emplace_back("diamond path LP", diamond_capacity(*diamond).value);
        values.emplace_back("diamond schedule LP", solve_p4(*diamond).value);
        BruteForceResult brute = brute_force_capacity(network, options.max_states);
        values.emplace_back("state LP (exhaustive)", brute.value);
        values.emplace_back("exhaustive min cut of the optimal schedule",
                            exhaustive_min_cut(network, brute.schedule));
    } else {
        BruteForceResult brute = brute_force_capacity(network, options.max_states);
        values.emplace_back("state LP (exhaustive)", brute.value);
        values.emplace_back("exhaustive min cut of the optimal schedule",
                            exhaustive_min_cut(network, brute.schedule));
    }

    bool agree = true;
    for (const auto& [name, value] : values) {
        if (value != values.front().second) agree = false;
    }

    if (options.json) {
        nlohmann::json methods = nlohmann::json::array();
        for (const auto& [name, value] : values) {
            methods.push_back({{"method", name}, {"value", format_rational(value)}});
        }
        nlohmann::json doc{{"methods", std::move(methods)}, {"agree", agree}};
        out << doc.dump(2) << "\n";
        return agree ? 0 : 1;
    }
    for (const auto& [name, value] : values) {
        out << name << ": " << both_forms(value) << "\n";
    }
    out << (agree ? "PASS: all methods agree exactly" : "FAIL: methods disagree") << "\n";
    return agree ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact capacities and beam schedules for 1-2-1 relay networks"};
    app.require_subcommand(1);

    CommonOptions options;
    bool with_gap = false;
    bool verify = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", options.file, "network document (JSON)")->required();
        cmd->add_flag("--json", options.json, "machine-readable output");
        cmd->add_option("--epsilon", options.epsilon,
                        "rationalization budget for decimal capacities (p/q)");
        cmd->add_option("--max-paths", options.max_paths, "path enumeration cap");
        cmd->add_option("--max-states", options.max_states, "state enumeration cap");
    };

    CLI::App* capacity_cmd = app.add_subcommand("capacity", "approximate capacity");
    add_common(capacity_cmd);
    capacity_cmd->add_flag("--gap", with_gap, "print the constant-gap bracket");

    CLI::App* schedule_cmd = app.add_subcommand("schedule", "optimal link schedule");
    add_common(schedule_cmd);
    schedule_cmd->add_flag("--verify", verify, "simulate the schedule and print the rate");

    CLI::App* paths_cmd = app.add_subcommand("paths", "path utilization and guarantees");
    add_common(paths_cmd);

    CLI::App* check_cmd = app.add_subcommand("check", "cross-validate independent methods");
    add_common(check_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (capacity_cmd->parsed()) return cmd_capacity(options, with_gap, out, err);
        if (schedule_cmd->parsed()) return cmd_schedule(options, verify, out, err);
        if (paths_cmd->parsed()) return cmd_paths(options, out, err);
        return cmd_check(options, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedModeError& e) {
        err << "unsupported: " << e.what() << "\n";
        return 3;
    } catch (const SizeLimitError& e) {
        err << "size limit: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace one21
