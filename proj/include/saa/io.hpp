#pragma once

// JSON and CSV forms of environments, predictions, solver results and payoff
// tables. Goods are 1-based in every serialized form.

#include <string>

#include <json.hpp>

#include "saa/empirical_game.hpp"
#include "saa/environment.hpp"
#include "saa/sc_solver.hpp"
#include "saa/strategy.hpp"

namespace saa::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json bundle_to_json(Bundle b);
Bundle bundle_from_json(const json& j, int num_goods);

/// Keys: num_agents, num_goods, model ("uniform" | "exponential" | "fixed"),
/// fixed_valuations (per agent, list of {"bundle": [...], "value": v} or
/// [[...], v] pairs), price_cap, seed, optional pruning ("zero" | "clamp" | "sort").
/// Errors are ConfigError with the offending key.
EnvironmentSpec environment_from_json(const json& j);
json environment_to_json(const EnvironmentSpec& env);

/// Array of per-good mass arrays over prices 0..V.
json distribution_to_json(const MarginalPriceDistribution& dist);
MarginalPriceDistribution distribution_from_json(const json& j);
/// Header "good,price,mass", one row per (good, price).
std::string distribution_to_csv(const MarginalPriceDistribution& dist);
MarginalPriceDistribution distribution_from_csv(const std::string& text);

json point_prediction_to_json(const PointPrediction& p);
PointPrediction point_prediction_from_json(const json& j);

json strategy_to_json(const StrategySpec& spec);
StrategySpec strategy_from_json(const json& j);

json roster_to_json(const StrategyRoster& roster);
StrategyRoster roster_from_json(const json& j);

json sc_params_to_json(const SCSolverParams& p);
SCSolverParams sc_params_from_json(const json& j, SCSolverParams defaults = {});
json sc_result_to_json(const SCResult& r, const SCSolverParams& params);

json payoff_table_to_json(const EmpiricalGame& game, const StrategyRoster& roster,
                          const EnvironmentSpec& env);
struct PayoffTable {
  EmpiricalGame game;
  StrategyRoster roster;
  json environment;
};
PayoffTable payoff_table_from_json(const json& j);

/// Deterministic text form (2-space indent, trailing newline).
std::string dump(const json& j);
json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace saa::io
