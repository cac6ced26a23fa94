#include <unistd.h>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hubnet/report.hpp"
#include "hubnet/scenario.hpp"

namespace {

using namespace hubnet;

bool use_color() {
    return ::isatty(STDOUT_FILENO) == 1 && std::getenv("HUBNET_NO_COLOR") == nullptr;
}

// Exit codes: 0 ok, 1 validation, 2 I/O or parse, 3 negative cycle.
int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const ValidationError& err) {
        std::cerr << err.what() << "\n";
        return 1;
    } catch (const NegativeCycleError& err) {
        std::cerr << err.what() << "\n";
        return 3;
    } catch (const ParseError& err) {
        std::cerr << err.what() << "\n";
        return 2;
    } catch (const IoError& err) {
        std::cerr << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 70;
    }
}

CostClass parse_class(const std::string& name) {
    if (name == "heavy") return CostClass::ActorHeavy;
    if (name == "light") return CostClass::ActorLight;
    return CostClass::Buyer;
}

int run_solve(const std::string& path, const std::string& format) {
    Scenario scn = load_scenario(path);
    SolveReport report = solve_scenario(scn);
    if (format == "json")
        std::cout << render_json(report).dump(2) << "\n";
    else
        std::cout << render_text(report, use_color());
    std::cerr << "solved in " << std::chrono::duration<double, std::milli>(report.duration).count()
              << " ms\n";
    return 0;
}

int run_apsp(const std::string& path, const std::string& cls, const std::string& format,
             const std::vector<int>& from, const std::vector<int>& to) {
    Scenario scn = load_scenario(path);
    ApspView view = apsp_view(scn, parse_class(cls), from, to);
    if (format == "json")
        std::cout << render_apsp_json(view).dump(2) << "\n";
    else
        std::cout << render_apsp_text(view);
    return 0;
}

int run_validate(const std::string& path, const std::string& format) {
    if (format == "json") {
        try {
            Scenario scn = load_scenario(path);
            nlohmann::json doc = {{"ok", true},
                                  {"vertices", scn.network().vertex_count()},
                                  {"edges", scn.network().edges().size()},
                                  {"production_hubs", scn.production_hubs().size()},
                                  {"storages", scn.storages().size()},
                                  {"buyers", scn.buyers().size()},
                                  {"candidates", scn.candidate_locations().size()},
                                  {"actors", scn.actor_count()},
                                  {"profiles", scn.profile_count()}};
            std::cout << doc.dump(2) << "\n";
            return 0;
        } catch (const ValidationError& err) {
            nlohmann::json issues = nlohmann::json::array();
            for (const ValidationIssue& issue : err.issues())
                issues.push_back({{"code", std::string(to_string(issue.code))}, {"message", issue.message}});
            std::cout << nlohmann::json{{"ok", false}, {"issues", std::move(issues)}}.dump(2) << "\n";
            std::cerr << err.what() << "\n";
            return 1;
        }
    }
    Scenario scn = load_scenario(path);
    std::cout << "OK\n"
              << scn.network().vertex_count() << " vertices, " << scn.network().edges().size()
              << " edges, " << scn.production_hubs().size() << " production hubs, "
              << scn.storages().size() << " storages, " << scn.buyers().size() << " buyers, "
              << scn.candidate_locations().size() << " candidates, " << scn.actor_count()
              << " actors, " << scn.profile_count() << " profiles\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trading hub placement on weighted transport networks"};
    app.require_subcommand(1);

    std::string path;
    std::string format = "text";
    std::string cost_class = "heavy";
    std::vector<int> from, to;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("scenario", path, "scenario JSON file")->required();
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    CLI::App* solve = app.add_subcommand("solve", "run the full placement pipeline");
    add_common(solve);

    CLI::App* apsp = app.add_subcommand("apsp", "print shortest path weights for one cost class");
    add_common(apsp);
    apsp->add_option("--class", cost_class, "cost class")
        ->check(CLI::IsMember({"heavy", "light", "buyer"}))
        ->capture_default_str();
    apsp->add_option("--from", from, "source vertices (default: all)")->delimiter(',');
    apsp->add_option("--to", to, "target vertices (default: all)")->delimiter(',');

    CLI::App* validate = app.add_subcommand("validate", "check a scenario file");
    add_common(validate);

    CLI11_PARSE(app, argc, argv);

    if (solve->parsed()) return guarded([&] { return run_solve(path, format); });
    if (apsp->parsed()) return guarded([&] { return run_apsp(path, cost_class, format, from, to); });
    return guarded([&] { return run_validate(path, format); });
}
