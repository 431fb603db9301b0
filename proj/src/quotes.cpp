#include "saa/quotes.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "saa/errors.hpp"

namespace saa {

AuctionConfig AuctionConfig::make(int num_goods, int price_cap) {
  AuctionConfig c;
  c.num_goods = num_goods;
  c.price_cap = price_cap;
  c.bid_increment = 1;
  c.max_rounds = 10 * num_goods * price_cap;
  c.validate();
  return c;
}

void AuctionConfig::validate() const {
  if (num_goods < 1 || num_goods > kMaxGoods)
    throw std::invalid_argument("num_goods must be in [1, " + std::to_string(kMaxGoods) + "]");
  if (price_cap < 1) throw std::invalid_argument("price_cap must be >= 1");
  if (bid_increment != 1) throw std::invalid_argument("bid_increment is fixed at 1");
  if (max_rounds < 1) throw std::invalid_argument("max_rounds must be >= 1");
}

std::span<const int> QuoteState::history_row(int r) const {
  const auto m = static_cast<std::size_t>(num_goods());
  return std::span<const int>(price_history).subspan(static_cast<std::size_t>(r) * m, m);
}

int QuoteState::history_rows() const {
  return num_goods() == 0 ? 0 : static_cast<int>(price_history.size()) / num_goods();
}

Bundle QuoteState::winning_set(AgentId agent) const {
  Bundle b = 0;
  for (int m = 0; m < num_goods(); ++m)
    if (winner[m] == agent) b |= good_bit(m);
  return b;
}

void BidSet::add_at_ask(AgentId agent, Bundle goods, const QuoteState& state) {
  for (int m = 0; goods != 0; ++m, goods >>= 1)
    if (goods & 1u) bids.push_back({agent, m, state.bid_prices[m] + 1});
}

QuoteState open_auction(const AuctionConfig& config) {
  config.validate();
  QuoteState s;
  s.bid_prices.assign(config.num_goods, 0);
  s.winner.assign(config.num_goods, std::nullopt);
  return s;
}

bool admit_bids(QuoteState& state, const BidSet& bids, const AuctionConfig& config,
                TieBreaker& ties) {
  const int num_goods = state.num_goods();
  std::vector<int> best(num_goods, -1);
  for (const Bid& b : bids.bids) {
    if (b.good < 0 || b.good >= num_goods)
      throw ProtocolViolation("bid on unknown good " + std::to_string(b.good + 1));
    if (b.amount < state.bid_prices[b.good] + config.bid_increment)
      throw ProtocolViolation("agent " + std::to_string(b.agent) + " bid " +
                              std::to_string(b.amount) + " below ask on good " +
                              std::to_string(b.good + 1));
    if (b.amount > config.price_cap)
      throw ProtocolViolation("agent " + std::to_string(b.agent) + " bid above price cap on good " +
                              std::to_string(b.good + 1));
    if (state.winner[b.good] == b.agent)
      throw ProtocolViolation("agent " + std::to_string(b.agent) +
                              " raised its own standing bid on good " + std::to_string(b.good + 1));
    best[b.good] = std::max(best[b.good], b.amount);
  }

  bool any = false;
  std::vector<AgentId> tied;
  for (int m = 0; m < num_goods; ++m) {
    if (best[m] < 0) continue;
    tied.clear();
    for (const Bid& b : bids.bids)
      if (b.good == m && b.amount == best[m]) tied.push_back(b.agent);
    std::sort(tied.begin(), tied.end());
    tied.erase(std::unique(tied.begin(), tied.end()), tied.end());
    const std::size_t pick = tied.size() == 1 ? 0 : ties.pick(tied.size());
    state.bid_prices[m] = best[m];
    state.winner[m] = tied[pick];
    any = true;
  }
  ++state.round;
  state.price_history.insert(state.price_history.end(), state.bid_prices.begin(),
                             state.bid_prices.end());
  return any;
}

}  // namespace saa
