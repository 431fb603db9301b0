#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "saa/quotes.hpp"
#include "saa/rng.hpp"
#include "saa/valuation.hpp"

namespace saa {

struct UniformModel {};
struct ExponentialModel {};
struct FixedModel {
  std::vector<TableValuation> valuations;  // one per agent
};

using PreferenceSpec = std::variant<UniformModel, ExponentialModel, FixedModel>;

/// An SAA environment: mechanism size, agents, and how their preferences
/// are drawn.
struct EnvironmentSpec {
  int num_agents = 1;
  int num_goods = 1;
  PreferenceSpec preferences = UniformModel{};
  int price_cap = 55;
  std::uint64_t seed = 0;
  PruningPolicy pruning = PruningPolicy::ZeroViolators;

  /// Scheduling environment with V = 55.
  static EnvironmentSpec scheduling(PreferenceModel model, int num_agents, int num_goods,
                                    std::uint64_t seed);
  static EnvironmentSpec fixed(std::vector<TableValuation> valuations, int price_cap,
                               std::uint64_t seed);

  void validate() const;
  AuctionConfig auction_config() const { return AuctionConfig::make(num_goods, price_cap); }
};

/// Draw all agents' valuations into `out` (resized to num_agents).
void sample_agents(const EnvironmentSpec& env, Rng& rng, std::vector<Valuation>& out);

/// Exposure example preferences (M = N = 3): one complementary agent and two
/// single-unit agents.
std::vector<TableValuation> exposure_example_valuations();
/// Two-agent example preferences (M = N = 2): no competitive equilibrium exists.
std::vector<TableValuation> no_equilibrium_valuations();

}  // namespace saa
