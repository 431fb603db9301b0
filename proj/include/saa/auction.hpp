#pragma once

#include <optional>
#include <span>
#include <vector>

#include "saa/quotes.hpp"
#include "saa/strategy.hpp"
#include "saa/valuation.hpp"

namespace saa {

struct Participant {
  const Valuation* valuation = nullptr;
  const StrategySpec* strategy = nullptr;
};

struct AuctionOutcome {
  std::vector<int> final_prices;                 // 0 for unsold goods
  std::vector<std::optional<AgentId>> allocation;
  std::vector<Bundle> holdings;                  // per agent
  std::vector<long> surpluses;                   // per agent
  int rounds_used = 0;
  bool quiesced = false;
};

/// Run synchronous rounds until quiescence or config.max_rounds. Every agent
/// bids against the same pre-round quotes; agent i has id i.
AuctionOutcome run_auction(const AuctionConfig& config, std::span<const Participant> agents,
                           TieBreaker& ties);

/// Sum of bundle values over all agents (the allocation value).
long allocation_value(std::span<const Participant> agents, const AuctionOutcome& outcome);

/// Largest total value of any partition of the goods among the agents.
/// O(N 3^M), intended for M up to about 10.
long optimal_welfare(std::span<const Valuation> valuations);

}  // namespace saa
