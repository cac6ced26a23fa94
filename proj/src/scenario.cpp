#include "hubnet/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace hubnet {

namespace {

using nlohmann::json;

// Exact parsing needs magnitudes where a 4-digit decimal and its double
// round-trip uniquely.
constexpr double kMaxMoneyMagnitude = 1e9;

void require_keys(const json& obj, std::initializer_list<const char*> required,
                  const std::string& context) {
    for (const char* key : required) {
        if (!obj.contains(key)) throw ParseError(context + ": missing key \"" + key + "\"");
    }
    for (const auto& item : obj.items()) {
        bool known = std::any_of(required.begin(), required.end(),
                                 [&](const char* key) { return item.key() == key; });
        if (!known) throw ParseError(context + ": unknown key \"" + item.key() + "\"");
    }
}

int64_t int_from_json(const json& value, const std::string& context) {
    if (value.is_number_unsigned()) {
        uint64_t v = value.get<uint64_t>();
        if (v > static_cast<uint64_t>(INT64_MAX)) throw ParseError(context + ": integer out of range");
        return static_cast<int64_t>(v);
    }
    if (value.is_number_integer()) return value.get<int64_t>();
    throw ParseError(context + ": expected an integer");
}

VertexId vertex_from_json(const json& value, const std::string& context) {
    int64_t v = int_from_json(value, context);
    if (v < INT32_MIN || v > INT32_MAX) throw ParseError(context + ": vertex id out of range");
    return static_cast<VertexId>(v);
}

}  // namespace

Money money_from_json(const json& value, const std::string& context) {
    if (value.is_number_integer() || value.is_number_unsigned()) {
        int64_t v = int_from_json(value, context);
        if (v > static_cast<int64_t>(kMaxMoneyMagnitude) || v < -static_cast<int64_t>(kMaxMoneyMagnitude))
            throw ParseError(context + ": value magnitude above supported bound 1e9");
        return Money::from_units(v);
    }
    if (value.is_number_float()) {
        double v = value.get<double>();
        if (!std::isfinite(v)) throw ParseError(context + ": value is not finite");
        if (std::abs(v) > kMaxMoneyMagnitude)
            throw ParseError(context + ": value magnitude above supported bound 1e9");
        int64_t minor = std::llround(v * Money::kScale);
        if (static_cast<double>(minor) / Money::kScale != v)
            throw ParseError(context + ": more than 4 fractional digits");
        return Money::from_minor(minor);
    }
    throw ParseError(context + ": expected a number");
}

RawScenario scenario_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("scenario: top level must be an object");
    require_keys(doc,
                 {"vertices", "edges", "production_hubs", "storages", "buyers", "candidate_locations",
                  "actor_count", "batch_heavy", "batch_light", "margin"},
                 "scenario");

    RawScenario raw;
    raw.vertex_count = int_from_json(doc["vertices"], "vertices");

    if (!doc["edges"].is_array()) throw ParseError("edges: expected an array");
    for (size_t i = 0; i < doc["edges"].size(); ++i) {
        const json& e = doc["edges"][i];
        std::string ctx = "edges[" + std::to_string(i) + "]";
        if (!e.is_object()) throw ParseError(ctx + ": expected an object");
        require_keys(e, {"u", "v", "heavy", "light", "buyer"}, ctx);
        raw.edges.push_back({vertex_from_json(e["u"], ctx + ".u"), vertex_from_json(e["v"], ctx + ".v"),
                             money_from_json(e["heavy"], ctx + ".heavy"),
                             money_from_json(e["light"], ctx + ".light"),
                             money_from_json(e["buyer"], ctx + ".buyer")});
    }

    if (!doc["production_hubs"].is_array()) throw ParseError("production_hubs: expected an array");
    for (size_t i = 0; i < doc["production_hubs"].size(); ++i) {
        const json& h = doc["production_hubs"][i];
        std::string ctx = "production_hubs[" + std::to_string(i) + "]";
        if (!h.is_object()) throw ParseError(ctx + ": expected an object");
        require_keys(h, {"vertex", "unit_price"}, ctx);
        raw.production_hubs.push_back({vertex_from_json(h["vertex"], ctx + ".vertex"),
                                       money_from_json(h["unit_price"], ctx + ".unit_price")});
    }

    if (!doc["storages"].is_array()) throw ParseError("storages: expected an array");
    for (size_t i = 0; i < doc["storages"].size(); ++i) {
        const json& s = doc["storages"][i];
        std::string ctx = "storages[" + std::to_string(i) + "]";
        if (!s.is_object()) throw ParseError(ctx + ": expected an object");
        require_keys(s, {"vertex", "unit_fee"}, ctx);
        raw.storages.push_back({vertex_from_json(s["vertex"], ctx + ".vertex"),
                                money_from_json(s["unit_fee"], ctx + ".unit_fee")});
    }

    if (!doc["buyers"].is_array()) throw ParseError("buyers: expected an array");
    for (size_t i = 0; i < doc["buyers"].size(); ++i) {
        const json& b = doc["buyers"][i];
        std::string ctx = "buyers[" + std::to_string(i) + "]";
        if (!b.is_object()) throw ParseError(ctx + ": expected an object");
        require_keys(b, {"vertex", "demand"}, ctx);
        raw.buyers.push_back({vertex_from_json(b["vertex"], ctx + ".vertex"),
                              int_from_json(b["demand"], ctx + ".demand")});
    }

    if (!doc["candidate_locations"].is_array()) throw ParseError("candidate_locations: expected an array");
    for (size_t i = 0; i < doc["candidate_locations"].size(); ++i)
        raw.candidate_locations.push_back(
            vertex_from_json(doc["candidate_locations"][i], "candidate_locations[" + std::to_string(i) + "]"));

    raw.actor_count = int_from_json(doc["actor_count"], "actor_count");
    raw.batch_heavy = int_from_json(doc["batch_heavy"], "batch_heavy");
    raw.batch_light = int_from_json(doc["batch_light"], "batch_light");

    const json& margin = doc["margin"];
    if (!margin.is_object() || margin.size() != 1)
        throw ParseError("margin: expected exactly one of \"fraction_of_base\" or \"per_location\"");
    if (margin.contains("fraction_of_base")) {
        Money mu = money_from_json(margin["fraction_of_base"], "margin.fraction_of_base");
        raw.margin = FractionOfBase{Rational::make(mu.minor(), Money::kScale)};
    } else if (margin.contains("per_location")) {
        const json& table = margin["per_location"];
        if (!table.is_object()) throw ParseError("margin.per_location: expected an object");
        PerLocationMargin per;
        for (const auto& item : table.items()) {
            const std::string& key = item.key();
            if (key.empty() ||
                !std::all_of(key.begin(), key.end(), [](unsigned char c) { return std::isdigit(c); }))
                throw ParseError("margin.per_location: key \"" + key + "\" is not a vertex id");
            per.amounts[static_cast<VertexId>(std::stoll(key))] =
                money_from_json(item.value(), "margin.per_location[" + key + "]");
        }
        raw.margin = std::move(per);
    } else {
        throw ParseError("margin: expected \"fraction_of_base\" or \"per_location\"");
    }

    return raw;
}

nlohmann::json scenario_to_json(const Scenario& scn) {
    json doc;
    doc["vertices"] = scn.network().vertex_count();
    doc["edges"] = json::array();
    for (const Edge& e : scn.network().edges())
        doc["edges"].push_back({{"u", e.u},
                                {"v", e.v},
                                {"heavy", e.cost_heavy.to_double()},
                                {"light", e.cost_light.to_double()},
                                {"buyer", e.cost_buyer.to_double()}});
    doc["production_hubs"] = json::array();
    for (const ProductionHub& h : scn.production_hubs())
        doc["production_hubs"].push_back({{"vertex", h.vertex}, {"unit_price", h.unit_price.to_double()}});
    doc["storages"] = json::array();
    for (const Storage& s : scn.storages())
        doc["storages"].push_back({{"vertex", s.vertex}, {"unit_fee", s.unit_fee.to_double()}});
    doc["buyers"] = json::array();
    for (const Buyer& b : scn.buyers())
        doc["buyers"].push_back({{"vertex", b.vertex}, {"demand", b.demand}});
    doc["candidate_locations"] = scn.candidate_locations();
    doc["actor_count"] = scn.actor_count();
    doc["batch_heavy"] = scn.batch_heavy();
    doc["batch_light"] = scn.batch_light();

    if (const auto* frac = std::get_if<FractionOfBase>(&scn.margin())) {
        auto as_money = frac->mu.to_money_exact();
        if (!as_money)
            throw std::domain_error("margin fraction is not representable with 4 fractional digits");
        doc["margin"] = {{"fraction_of_base", as_money->to_double()}};
    } else {
        const auto& per = std::get<PerLocationMargin>(scn.margin());
        json table = json::object();
        for (const auto& [vertex, amount] : per.amounts) table[std::to_string(vertex)] = amount.to_double();
        doc["margin"] = {{"per_location", std::move(table)}};
    }
    return doc;
}

Scenario Scenario::validate(RawScenario raw) {
    std::vector<ValidationIssue> issues;
    auto add = [&](ValidationCode code, std::string msg) {
        issues.push_back({code, std::move(msg)});
    };

    if (raw.vertex_count > INT32_MAX) {
        add(ValidationCode::NonPositiveQuantity, "vertex count out of supported range");
        throw ValidationError(std::move(issues));
    }
    int n = static_cast<int>(raw.vertex_count);
    auto network_issues = Network::check(n, raw.edges, true);
    issues.insert(issues.end(), network_issues.begin(), network_issues.end());
    bool ids_checkable = raw.vertex_count >= 1;

    auto check_vertex = [&](VertexId v, const std::string& what) {
        if (!ids_checkable) return;
        if (v < 0 || v >= n)
            add(ValidationCode::UnknownVertex,
                what + " references vertex " + std::to_string(v) + " outside [0," + std::to_string(n) + ")");
    };
    auto check_distinct = [&](const std::vector<VertexId>& vertices, const std::string& what) {
        std::set<VertexId> seen;
        for (VertexId v : vertices)
            if (!seen.insert(v).second)
                add(ValidationCode::DuplicateVertex, what + " lists vertex " + std::to_string(v) + " twice");
    };

    if (raw.production_hubs.empty()) add(ValidationCode::EmptyRole, "production_hubs is empty");
    if (raw.storages.empty()) add(ValidationCode::EmptyRole, "storages is empty");
    if (raw.buyers.empty()) add(ValidationCode::EmptyRole, "buyers is empty");

    std::vector<VertexId> hub_vertices, storage_vertices, buyer_vertices;
    for (size_t i = 0; i < raw.production_hubs.size(); ++i) {
        const auto& h = raw.production_hubs[i];
        check_vertex(h.vertex, "production_hubs[" + std::to_string(i) + "]");
        hub_vertices.push_back(h.vertex);
        if (h.unit_price < Money())
            add(ValidationCode::NegativeCost,
                "production hub at vertex " + std::to_string(h.vertex) + " has a negative unit price");
    }
    for (size_t i = 0; i < raw.storages.size(); ++i) {
        const auto& s = raw.storages[i];
        check_vertex(s.vertex, "storages[" + std::to_string(i) + "]");
        storage_vertices.push_back(s.vertex);
        if (s.unit_fee < Money())
            add(ValidationCode::NegativeCost,
                "storage at vertex " + std::to_string(s.vertex) + " has a negative unit fee");
    }
    for (size_t i = 0; i < raw.buyers.size(); ++i) {
        const auto& b = raw.buyers[i];
        check_vertex(b.vertex, "buyers[" + std::to_string(i) + "]");
        buyer_vertices.push_back(b.vertex);
        if (b.demand < 1)
            add(ValidationCode::NonPositiveQuantity,
                "buyer at vertex " + std::to_string(b.vertex) + " has nonpositive demand");
    }
    check_distinct(hub_vertices, "production_hubs");
    check_distinct(storage_vertices, "storages");
    check_distinct(buyer_vertices, "buyers");

    for (size_t i = 0; i < raw.candidate_locations.size(); ++i)
        check_vertex(raw.candidate_locations[i], "candidate_locations[" + std::to_string(i) + "]");
    check_distinct(raw.candidate_locations, "candidate_locations");

    if (raw.actor_count < 1)
        add(ValidationCode::NonPositiveQuantity, "actor_count must be positive");
    if (raw.batch_heavy < 1)
        add(ValidationCode::NonPositiveQuantity, "batch_heavy must be positive");
    if (raw.batch_light < 1)
        add(ValidationCode::NonPositiveQuantity, "batch_light must be positive");

    if (raw.actor_count >= 1 &&
        raw.candidate_locations.size() < static_cast<size_t>(raw.actor_count))
        add(ValidationCode::TooFewCandidates,
            "need at least " + std::to_string(raw.actor_count) + " candidate locations, got " +
                std::to_string(raw.candidate_locations.size()));

    if (const auto* frac = std::get_if<FractionOfBase>(&raw.margin)) {
        if (frac->mu.is_negative())
            add(ValidationCode::NegativeCost, "margin fraction is negative");
    } else {
        const auto& per = std::get<PerLocationMargin>(raw.margin);
        std::set<VertexId> candidates(raw.candidate_locations.begin(), raw.candidate_locations.end());
        for (const auto& [vertex, amount] : per.amounts) {
            check_vertex(vertex, "margin.per_location");
            if (amount < Money())
                add(ValidationCode::NegativeCost,
                    "margin for vertex " + std::to_string(vertex) + " is negative");
            if (!candidates.contains(vertex))
                add(ValidationCode::MarginOutsideCandidates,
                    "margin entry for vertex " + std::to_string(vertex) + " which is not a candidate location");
        }
    }

    if (!issues.empty()) throw ValidationError(std::move(issues));

    Scenario scn;
    scn.network_ = Network::create(n, std::move(raw.edges));
    scn.production_hubs_ = std::move(raw.production_hubs);
    scn.storages_ = std::move(raw.storages);
    scn.buyers_ = std::move(raw.buyers);
    scn.candidate_locations_ = std::move(raw.candidate_locations);
    scn.actor_count_ = static_cast<int>(raw.actor_count);
    scn.batch_heavy_ = raw.batch_heavy;
    scn.batch_light_ = raw.batch_light;
    scn.margin_ = std::move(raw.margin);
    return scn;
}

int64_t Scenario::profile_count() const {
    int64_t n = static_cast<int64_t>(candidate_locations_.size());
    int64_t k = actor_count_;
    if (k > n) return 0;
    k = std::min(k, n - k);
    __int128 result = 1;
    for (int64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > INT64_MAX) return INT64_MAX;
    }
    return static_cast<int64_t>(result);
}

RawScenario parse_scenario_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ParseError(std::string("invalid JSON: ") + err.what());
    }
    return scenario_from_json(doc);
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open scenario file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("cannot read scenario file: " + path);
    return Scenario::validate(parse_scenario_text(buffer.str()));
}

}  // namespace hubnet
