#include "hubnet/report.hpp"

#include <algorithm>
#include <sstream>

namespace hubnet {

namespace {

using nlohmann::json;

MoneyMatrix distance_table(const CostMatrix& apsp, const std::vector<VertexId>& from,
                           const std::vector<VertexId>& to) {
    MoneyMatrix table(static_cast<int>(from.size()), static_cast<int>(to.size()));
    for (size_t r = 0; r < from.size(); ++r)
        for (size_t c = 0; c < to.size(); ++c)
            table.at(static_cast<int>(r), static_cast<int>(c)) = apsp.at(from[r], to[c]).money();
    return table;
}

std::string vertex_label(VertexId v) { return "x" + std::to_string(v); }

std::string profile_label(const Profile& profile) {
    std::string out = "(";
    for (size_t i = 0; i < profile.hubs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(profile.hubs[i]);
    }
    return out + ")";
}

// Rows of cells -> aligned text. First column left-aligned, the rest right.
std::string format_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> widths;
    for (const auto& row : rows) {
        if (row.size() > widths.size()) widths.resize(row.size(), 0);
        for (size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    }
    std::string out;
    for (const auto& row : rows) {
        std::string line = "  ";
        for (size_t c = 0; c < row.size(); ++c) {
            std::string cell = row[c];
            if (c == 0)
                cell.append(widths[c] - cell.size(), ' ');
            else
                cell.insert(0, widths[c] - cell.size(), ' ');
            line += cell;
            if (c + 1 < row.size()) line += "  ";
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

std::vector<std::vector<std::string>> weight_table_rows(const MoneyMatrix& table,
                                                        const std::vector<VertexId>& from,
                                                        const std::vector<VertexId>& to) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header = {""};
    for (VertexId v : to) header.push_back(vertex_label(v));
    rows.push_back(std::move(header));
    for (size_t r = 0; r < from.size(); ++r) {
        std::vector<std::string> row = {vertex_label(from[r])};
        for (size_t c = 0; c < to.size(); ++c)
            row.push_back(table.at(static_cast<int>(r), static_cast<int>(c)).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json money_matrix_json(const MoneyMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_double());
        rows.push_back(std::move(row));
    }
    return rows;
}

json keyed_table_json(const MoneyMatrix& table, const std::vector<VertexId>& from,
                      const std::vector<VertexId>& to) {
    json out = json::object();
    for (size_t r = 0; r < from.size(); ++r) {
        json row = json::object();
        for (size_t c = 0; c < to.size(); ++c)
            row[std::to_string(to[c])] = table.at(static_cast<int>(r), static_cast<int>(c)).to_double();
        out[std::to_string(from[r])] = std::move(row);
    }
    return out;
}

}  // namespace

SolveReport solve_scenario(const Scenario& scn) {
    auto started = std::chrono::steady_clock::now();

    SolveReport report;
    report.vertex_count = scn.network().vertex_count();
    report.edge_count = static_cast<int>(scn.network().edges().size());
    report.actor_count = scn.actor_count();
    report.batch_heavy = scn.batch_heavy();
    report.batch_light = scn.batch_light();
    for (const auto& hub : scn.production_hubs()) report.production_vertices.push_back(hub.vertex);
    for (const auto& storage : scn.storages()) report.storage_vertices.push_back(storage.vertex);
    for (const auto& buyer : scn.buyers()) report.buyer_vertices.push_back(buyer.vertex);
    report.candidate_vertices = scn.candidate_locations();

    CostMatrix apsp_heavy = all_pairs_shortest_paths(build_weight_matrix(scn.network(), CostClass::ActorHeavy));
    CostMatrix apsp_light = all_pairs_shortest_paths(build_weight_matrix(scn.network(), CostClass::ActorLight));
    CostMatrix apsp_buyer = all_pairs_shortest_paths(build_weight_matrix(scn.network(), CostClass::Buyer));

    report.production_to_storage = distance_table(apsp_heavy, report.production_vertices, report.storage_vertices);
    report.storage_to_candidate = distance_table(apsp_light, report.storage_vertices, report.candidate_vertices);
    report.buyer_to_candidate = distance_table(apsp_buyer, report.buyer_vertices, report.candidate_vertices);

    report.plan = build_supply_plan(scn, apsp_heavy, apsp_light);
    report.payoff = build_payoff_matrix(scn, report.plan, apsp_buyer);
    report.compromise = solve_compromise(report.payoff.matrix());

    report.duration = std::chrono::steady_clock::now() - started;
    return report;
}

std::string render_text(const SolveReport& report, bool color) {
    const char* bold = color ? "\x1b[1m" : "";
    const char* green = color ? "\x1b[32m" : "";
    const char* reset = color ? "\x1b[0m" : "";

    std::ostringstream out;
    out << "scenario: " << report.vertex_count << " vertices, " << report.edge_count << " edges, "
        << report.actor_count << " actors, " << report.candidate_vertices.size() << " candidates, "
        << report.payoff.profiles().size() << " profiles (Q1=" << report.batch_heavy
        << ", Q2=" << report.batch_light << ")\n";

    out << "\n" << bold << "path weights, production hub -> storage (heavy route)" << reset << "\n";
    out << format_table(weight_table_rows(report.production_to_storage, report.production_vertices,
                                          report.storage_vertices));

    out << "\n" << bold << "path weights, storage -> candidate (light route)" << reset << "\n";
    out << format_table(weight_table_rows(report.storage_to_candidate, report.storage_vertices,
                                          report.candidate_vertices));

    out << "\n" << bold << "path weights, buyer -> candidate (buyer route)" << reset << "\n";
    out << format_table(weight_table_rows(report.buyer_to_candidate, report.buyer_vertices,
                                          report.candidate_vertices));

    out << "\n" << bold << "supply plan" << reset << "\n";
    {
        std::vector<std::vector<std::string>> rows = {
            {"location", "chain", "c1", "c2", "base", "margin", "price"}};
        for (const SupplyChoice& choice : report.plan.choices())
            rows.push_back({vertex_label(choice.location),
                            vertex_label(choice.production_vertex) + " -> " +
                                vertex_label(choice.storage_vertex),
                            choice.c1.str(), choice.c2.str(), choice.base_cost.str(),
                            choice.margin.str(), choice.unit_price.str()});
        out << format_table(rows);
    }

    out << "\n" << bold << "unit prices" << reset << "\n ";
    for (const SupplyChoice& choice : report.plan.choices())
        out << " " << vertex_label(choice.location) << "=" << choice.unit_price.str();
    out << "\n";

    const auto& profiles = report.payoff.profiles();
    auto matrix_rows = [&](const MoneyMatrix& m, const char* row_prefix) {
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> header = {""};
        for (const Profile& p : profiles) header.push_back(profile_label(p));
        rows.push_back(std::move(header));
        for (int r = 0; r < m.rows(); ++r) {
            std::vector<std::string> row = {row_prefix + std::to_string(r + 1)};
            for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
            rows.push_back(std::move(row));
        }
        return rows;
    };

    out << "\n" << bold << "payoff matrix" << reset << "\n";
    out << format_table(matrix_rows(report.payoff.matrix(), "actor "));

    out << "\n" << bold << "buyer assignments" << reset << "\n";
    for (size_t q = 0; q < profiles.size(); ++q) {
        out << "  " << profile_label(profiles[q]) << ":";
        for (const BuyerAssignment& a : report.payoff.assignments(static_cast<int>(q)))
            out << "  " << vertex_label(a.buyer_vertex) << "->" << vertex_label(a.chosen_hub) << " "
                << a.purchase_cost.str() << "+" << a.travel_cost.str() << "=" << a.total.str();
        out << "\n";
    }

    out << "\n" << bold << "perfect vector" << reset << "\n ";
    for (Money m : report.compromise.perfect) out << " " << m.str();
    out << "\n";

    out << "\n" << bold << "residual matrix" << reset << "\n";
    out << format_table(matrix_rows(report.compromise.residuals, "actor "));

    out << "\n" << bold << "sorted residuals (ascending per column)" << reset << "\n";
    out << format_table(matrix_rows(report.compromise.sorted_residuals, "level "));

    out << "\nmin-max residual: " << report.compromise.min_max_residual.str();
    if (report.compromise.decision_level)
        out << " (decision level " << *report.compromise.decision_level << ")";
    else
        out << " (tied through all levels)";
    out << "\n";

    if (report.compromise.selected.size() > 1) {
        out << "tied compromise profiles:";
        for (int q : report.compromise.selected) out << " " << profile_label(profiles[q]);
        out << "\n";
    }

    out << green << "compromise placement: " << profile_label(profiles[report.compromise.selected.front()])
        << " payoffs (";
    for (size_t i = 0; i < report.compromise.selected_payoffs.size(); ++i) {
        if (i) out << ", ";
        out << report.compromise.selected_payoffs[i].str();
    }
    out << ")" << reset << "\n";
    return std::move(out).str();
}

json render_json(const SolveReport& report) {
    json doc;
    doc["schema_version"] = 1;
    doc["scenario"] = {{"vertices", report.vertex_count},
                       {"edges", report.edge_count},
                       {"actors", report.actor_count},
                       {"candidates", report.candidate_vertices.size()},
                       {"profiles", report.payoff.profiles().size()},
                       {"batch_heavy", report.batch_heavy},
                       {"batch_light", report.batch_light}};

    doc["path_weights"] = {
        {"production_to_storage",
         keyed_table_json(report.production_to_storage, report.production_vertices, report.storage_vertices)},
        {"storage_to_candidate",
         keyed_table_json(report.storage_to_candidate, report.storage_vertices, report.candidate_vertices)},
        {"buyer_to_candidate",
         keyed_table_json(report.buyer_to_candidate, report.buyer_vertices, report.candidate_vertices)}};

    json plan = json::object();
    json prices = json::object();
    for (const SupplyChoice& choice : report.plan.choices()) {
        std::string key = std::to_string(choice.location);
        plan[key] = {{"production", choice.production_vertex}, {"storage", choice.storage_vertex},
                     {"c1", choice.c1.to_double()},            {"c2", choice.c2.to_double()},
                     {"base_cost", choice.base_cost.to_double()}, {"margin", choice.margin.to_double()},
                     {"unit_price", choice.unit_price.to_double()}};
        prices[key] = choice.unit_price.to_double();
    }
    doc["supply_plan"] = std::move(plan);
    doc["prices"] = std::move(prices);

    json profiles = json::array();
    for (const Profile& p : report.payoff.profiles()) profiles.push_back(p.hubs);
    doc["profiles"] = std::move(profiles);
    doc["payoff_matrix"] = money_matrix_json(report.payoff.matrix());

    json assignments = json::array();
    for (size_t q = 0; q < report.payoff.profiles().size(); ++q) {
        json column = json::array();
        for (const BuyerAssignment& a : report.payoff.assignments(static_cast<int>(q)))
            column.push_back({{"buyer", a.buyer_vertex},
                              {"demand", a.demand},
                              {"hub", a.chosen_hub},
                              {"purchase", a.purchase_cost.to_double()},
                              {"travel", a.travel_cost.to_double()},
                              {"total", a.total.to_double()}});
        assignments.push_back(std::move(column));
    }
    doc["assignments"] = std::move(assignments);

    json perfect = json::array();
    for (Money m : report.compromise.perfect) perfect.push_back(m.to_double());
    doc["perfect_vector"] = std::move(perfect);
    doc["residuals"] = money_matrix_json(report.compromise.residuals);
    doc["sorted_residuals"] = money_matrix_json(report.compromise.sorted_residuals);

    json selected = json::array();
    for (int q : report.compromise.selected) selected.push_back(report.payoff.profiles()[q].hubs);
    json payoffs = json::array();
    for (Money m : report.compromise.selected_payoffs) payoffs.push_back(m.to_double());
    doc["compromise"] = {
        {"min_max_residual", report.compromise.min_max_residual.to_double()},
        {"decision_level",
         report.compromise.decision_level ? json(*report.compromise.decision_level) : json(nullptr)},
        {"selected_profiles", std::move(selected)},
        {"placement", report.payoff.profiles()[report.compromise.selected.front()].hubs},
        {"payoffs", std::move(payoffs)}};
    return doc;
}

ApspView apsp_view(const Scenario& scn, CostClass cls, std::vector<VertexId> from,
                   std::vector<VertexId> to) {
    const int n = scn.network().vertex_count();
    auto fill_all = [n](std::vector<VertexId>& list) {
        if (list.empty()) {
            list.resize(n);
            for (int i = 0; i < n; ++i) list[i] = i;
        }
    };
    fill_all(from);
    fill_all(to);
    for (VertexId v : from)
        if (v < 0 || v >= n) throw ValidationError({{ValidationCode::UnknownVertex,
                                                     "--from vertex " + std::to_string(v) + " out of range"}});
    for (VertexId v : to)
        if (v < 0 || v >= n) throw ValidationError({{ValidationCode::UnknownVertex,
                                                     "--to vertex " + std::to_string(v) + " out of range"}});

    CostMatrix apsp = all_pairs_shortest_paths(build_weight_matrix(scn.network(), cls));
    ApspView view;
    view.weights = distance_table(apsp, from, to);
    view.from = std::move(from);
    view.to = std::move(to);
    return view;
}

std::string render_apsp_text(const ApspView& view) {
    return format_table(weight_table_rows(view.weights, view.from, view.to));
}

json render_apsp_json(const ApspView& view) {
    json doc;
    doc["schema_version"] = 1;
    doc["weights"] = keyed_table_json(view.weights, view.from, view.to);
    return doc;
}

}  // namespace hubnet
