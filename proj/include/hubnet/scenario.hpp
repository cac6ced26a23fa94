#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hubnet/money.hpp"
#include "hubnet/network.hpp"
#include "hubnet/validation.hpp"

namespace hubnet {

struct ProductionHub {
    VertexId vertex = 0;
    Money unit_price;
    bool operator==(const ProductionHub&) const = default;
};

struct Storage {
    VertexId vertex = 0;
    Money unit_fee;
    bool operator==(const Storage&) const = default;
};

struct Buyer {
    VertexId vertex = 0;
    int64_t demand = 0;
    bool operator==(const Buyer&) const = default;
};

struct FractionOfBase {
    Rational mu;  // margin = mu * base cost
    bool operator==(const FractionOfBase&) const = default;
};

struct PerLocationMargin {
    std::map<VertexId, Money> amounts;
    bool operator==(const PerLocationMargin&) const = default;
};

using MarginPolicy = std::variant<FractionOfBase, PerLocationMargin>;

// Parsed but not yet validated problem instance.
struct RawScenario {
    int64_t vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<ProductionHub> production_hubs;
    std::vector<Storage> storages;
    std::vector<Buyer> buyers;
    std::vector<VertexId> candidate_locations;
    int64_t actor_count = 0;
    int64_t batch_heavy = 0;
    int64_t batch_light = 0;
    MarginPolicy margin = FractionOfBase{};
};

// Immutable validated instance. Construct through validate().
class Scenario {
public:
    static Scenario validate(RawScenario raw);  // throws ValidationError with all issues

    const Network& network() const { return network_; }
    const std::vector<ProductionHub>& production_hubs() const { return production_hubs_; }
    const std::vector<Storage>& storages() const { return storages_; }
    const std::vector<Buyer>& buyers() const { return buyers_; }
    const std::vector<VertexId>& candidate_locations() const { return candidate_locations_; }
    int actor_count() const { return actor_count_; }
    int64_t batch_heavy() const { return batch_heavy_; }
    int64_t batch_light() const { return batch_light_; }
    const MarginPolicy& margin() const { return margin_; }

    // C(|candidates|, actors), saturating at INT64_MAX.
    int64_t profile_count() const;

    bool operator==(const Scenario&) const = default;

private:
    Scenario() : network_(Network::create(1, {})) {}

    Network network_;
    std::vector<ProductionHub> production_hubs_;
    std::vector<Storage> storages_;
    std::vector<Buyer> buyers_;
    std::vector<VertexId> candidate_locations_;
    int actor_count_ = 0;
    int64_t batch_heavy_ = 0;
    int64_t batch_light_ = 0;
    MarginPolicy margin_ = FractionOfBase{};
};

// JSON scenario format. Money fields are decimal literals with at most
// 4 fractional digits; anything finer is rejected (ParseError).
RawScenario scenario_from_json(const nlohmann::json& doc);
nlohmann::json scenario_to_json(const Scenario& scn);

RawScenario parse_scenario_text(const std::string& text);
Scenario load_scenario(const std::string& path);  // IoError / ParseError / ValidationError

// Exact JSON-number <-> Money bridge used by the scenario format.
Money money_from_json(const nlohmann::json& value, const std::string& context);

}  // namespace hubnet
