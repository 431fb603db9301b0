#include "saa/auction.hpp"

#include <algorithm>
#include <stdexcept>

namespace saa {

AuctionOutcome run_auction(const AuctionConfig& config, std::span<const Participant> agents,
                           TieBreaker& ties) {
  if (agents.empty()) throw std::invalid_argument("run_auction: no agents");
  QuoteState state = open_auction(config);
  BidSet bids;
  AuctionOutcome out;

  while (state.round < config.max_rounds) {
    bids.clear();
    for (std::size_t i = 0; i < agents.size(); ++i) {
      const auto id = static_cast<AgentId>(i);
      const Bundle winning = state.winning_set(id);
      const Bundle goods =
          generate_bids(*agents[i].strategy, *agents[i].valuation, state, winning, config.price_cap);
      bids.add_at_ask(id, goods, state);
    }
    if (is_quiescent(admit_bids(state, bids, config, ties))) {
      out.quiesced = true;
      break;
    }
  }

  out.rounds_used = state.round;
  out.final_prices.resize(config.num_goods);
  out.allocation.resize(config.num_goods);
  out.holdings.assign(agents.size(), kEmptyBundle);
  for (int m = 0; m < config.num_goods; ++m) {
    out.allocation[m] = state.winner[m];
    out.final_prices[m] = state.winner[m] ? state.bid_prices[m] : 0;
    if (state.winner[m]) out.holdings[*state.winner[m]] |= good_bit(m);
  }
  out.surpluses.resize(agents.size());
  for (std::size_t i = 0; i < agents.size(); ++i)
    out.surpluses[i] = surplus(*agents[i].valuation, out.holdings[i],
                               std::span<const int>(out.final_prices));
  return out;
}

long allocation_value(std::span<const Participant> agents, const AuctionOutcome& outcome) {
  long total = 0;
  for (std::size_t i = 0; i < agents.size(); ++i)
    total += value(*agents[i].valuation, outcome.holdings[i]);
  return total;
}

long optimal_welfare(std::span<const Valuation> valuations) {
  if (valuations.empty()) return 0;
  const int m = num_goods(valuations[0]);
  const Bundle full = all_goods(m);
  // best[x]: top value from splitting x among the agents seen so far.
  std::vector<long> best(std::size_t{1} << m, 0), next(best.size());
  for (const auto& v : valuations) {
    for (Bundle x = 0; x <= full; ++x) {
      long top = best[x];
      for (Bundle t = x; t != 0; t = (t - 1) & x) top = std::max(top, value(v, t) + best[x & ~t]);
      next[x] = top;
    }
    best.swap(next);
  }
  return best[full];
}

}  // namespace saa
