#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "saa/bundle.hpp"
#include "saa/rng.hpp"

namespace saa {

using AgentId = int;

struct AuctionConfig {
  int num_goods = 1;
  int price_cap = 1;  // V: no admissible bid exceeds it
  int bid_increment = 1;
  int max_rounds = 10;

  /// Config with the default round bound of 10 * M * V.
  static AuctionConfig make(int num_goods, int price_cap);
  void validate() const;
};

/// Public state of the auction after `round` rounds.
struct QuoteState {
  int round = 0;
  std::vector<int> bid_prices;               // beta, one per good
  std::vector<std::optional<AgentId>> winner;
  std::vector<int> price_history;            // round-major, round x num_goods

  int num_goods() const { return static_cast<int>(bid_prices.size()); }
  std::span<const int> history_row(int r) const;
  int history_rows() const;
  /// Goods whose current standing bid belongs to `agent`.
  Bundle winning_set(AgentId agent) const;
};

struct Bid {
  AgentId agent = 0;
  int good = 0;
  int amount = 0;
};

/// All bids submitted in one round. Order carries no meaning.
struct BidSet {
  std::vector<Bid> bids;

  void clear() { bids.clear(); }
  bool empty() const { return bids.empty(); }
  /// Append ask-price bids for every good in `goods`.
  void add_at_ask(AgentId agent, Bundle goods, const QuoteState& state);
};

/// Source of tie-breaking choices. Called once per good with tied high
/// bids, in increasing good order; returns an index in [0, n).
class TieBreaker {
 public:
  virtual ~TieBreaker() = default;
  virtual std::size_t pick(std::size_t n) = 0;
};

class RngTieBreaker final : public TieBreaker {
 public:
  explicit RngTieBreaker(Rng& rng) : rng_(rng) {}
  std::size_t pick(std::size_t n) override { return rng_.uniform_index(n); }

 private:
  Rng& rng_;
};

QuoteState open_auction(const AuctionConfig& config);

/// Admit one round of bids in place. On each good the highest bid wins; ties
/// go to a bidder chosen by `ties` among the tied agents ordered by id, so the
/// result does not depend on the order of `bids.bids`. Advances the round and
/// appends the new price vector to the history. Returns whether any bid was
/// admitted. Throws ProtocolViolation for a bid below the ask price, above
/// the price cap, or on a good the bidder is already winning.
bool admit_bids(QuoteState& state, const BidSet& bids, const AuctionConfig& config,
                TieBreaker& ties);

constexpr bool is_quiescent(bool any_admitted) { return !any_admitted; }

}  // namespace saa
