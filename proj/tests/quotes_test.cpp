#include "saa/quotes.hpp"

#include <algorithm>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "saa/errors.hpp"

namespace saa {
namespace {

// Always picks the same slot of the tied list.
class FixedTie final : public TieBreaker {
 public:
  explicit FixedTie(std::size_t slot) : slot_(slot) {}
  std::size_t pick(std::size_t n) override {
    ++calls;
    return std::min(slot_, n - 1);
  }
  int calls = 0;

 private:
  std::size_t slot_;
};

TEST(OpenAuction, StartsAtZeroWithNoWinners) {
  const auto q = open_auction(AuctionConfig::make(3, 55));
  EXPECT_EQ(q.round, 0);
  EXPECT_EQ(q.bid_prices, (std::vector<int>{0, 0, 0}));
  for (const auto& w : q.winner) EXPECT_FALSE(w.has_value());
  EXPECT_EQ(q.history_rows(), 0);
}

TEST(AuctionConfig, DefaultRoundBound) {
  const auto c = AuctionConfig::make(5, 55);
  EXPECT_EQ(c.max_rounds, 5 * 55 * 10);
  EXPECT_THROW(AuctionConfig::make(0, 55), std::invalid_argument);
  EXPECT_THROW(AuctionConfig::make(17, 55), std::invalid_argument);
}

TEST(AdmitBids, TieBetweenTwoBidders) {
  const auto cfg = AuctionConfig::make(2, 10);
  for (std::size_t slot : {0u, 1u}) {
    auto q = open_auction(cfg);
    BidSet bids;
    bids.bids = {{2, 0, 1}, {1, 0, 1}};
    FixedTie ties(slot);
    EXPECT_TRUE(admit_bids(q, bids, cfg, ties));
    EXPECT_EQ(ties.calls, 1);
    EXPECT_EQ(q.bid_prices[0], 1);
    // Tied agents are ordered by id before the draw.
    EXPECT_EQ(q.winner[0], slot == 0 ? 1 : 2);
    EXPECT_FALSE(q.winner[1].has_value());
    EXPECT_EQ(q.round, 1);
    EXPECT_EQ(q.history_rows(), 1);
  }
}

TEST(AdmitBids, SingleBidderNeedsNoDraw) {
  const auto cfg = AuctionConfig::make(2, 10);
  auto q = open_auction(cfg);
  BidSet bids;
  bids.bids = {{0, 1, 1}};
  FixedTie ties(0);
  admit_bids(q, bids, cfg, ties);
  EXPECT_EQ(ties.calls, 0);
  EXPECT_EQ(q.winner[1], 0);
  EXPECT_EQ(q.bid_prices, (std::vector<int>{0, 1}));
}

TEST(AdmitBids, HigherBidBeatsAskBid) {
  const auto cfg = AuctionConfig::make(1, 10);
  auto q = open_auction(cfg);
  BidSet bids;
  bids.bids = {{0, 0, 1}, {1, 0, 3}};
  FixedTie ties(0);
  admit_bids(q, bids, cfg, ties);
  EXPECT_EQ(ties.calls, 0);
  EXPECT_EQ(q.winner[0], 1);
  EXPECT_EQ(q.bid_prices[0], 3);
}

TEST(AdmitBids, EmptyRoundIsQuiescent) {
  const auto cfg = AuctionConfig::make(2, 10);
  auto q = open_auction(cfg);
  FixedTie ties(0);
  const bool any = admit_bids(q, BidSet{}, cfg, ties);
  EXPECT_TRUE(is_quiescent(any));
  EXPECT_EQ(q.round, 1);
  EXPECT_EQ(q.bid_prices, (std::vector<int>{0, 0}));
}

TEST(AdmitBids, ProtocolViolations) {
  const auto cfg = AuctionConfig::make(2, 5);
  auto q = open_auction(cfg);
  FixedTie ties(0);
  BidSet first;
  first.bids = {{0, 0, 1}};
  admit_bids(q, first, cfg, ties);

  BidSet below;
  below.bids = {{1, 0, 1}};
  EXPECT_THROW(admit_bids(q, below, cfg, ties), ProtocolViolation);
  BidSet own;
  own.bids = {{0, 0, 2}};
  EXPECT_THROW(admit_bids(q, own, cfg, ties), ProtocolViolation);
  BidSet over;
  over.bids = {{1, 1, 6}};
  EXPECT_THROW(admit_bids(q, over, cfg, ties), ProtocolViolation);
  BidSet unknown;
  unknown.bids = {{1, 2, 1}};
  EXPECT_THROW(admit_bids(q, unknown, cfg, ties), ProtocolViolation);
}

TEST(AdmitBids, BidOrderDoesNotMatter) {
  const auto cfg = AuctionConfig::make(3, 20);
  std::vector<Bid> bids = {{0, 0, 1}, {1, 0, 1}, {2, 0, 1}, {1, 1, 2},
                           {3, 1, 2}, {0, 2, 1}, {3, 2, 4}};
  std::sort(bids.begin(), bids.end(),
            [](const Bid& a, const Bid& b) { return a.agent * 10 + a.good < b.agent * 10 + b.good; });
  std::optional<QuoteState> reference;
  do {
    auto q = open_auction(cfg);
    BidSet set;
    set.bids = bids;
    oracle::ScriptedTieBreaker ties({1, 1});
    admit_bids(q, set, cfg, ties);
    if (!reference) {
      reference = q;
      continue;
    }
    ASSERT_EQ(q.bid_prices, reference->bid_prices);
    ASSERT_EQ(q.winner, reference->winner);
  } while (std::next_permutation(bids.begin(), bids.end(), [](const Bid& a, const Bid& b) {
    return a.agent * 10 + a.good < b.agent * 10 + b.good;
  }));
  EXPECT_EQ(reference->winner[0], 1);
  EXPECT_EQ(reference->winner[1], 3);
  EXPECT_EQ(reference->winner[2], 3);
}

TEST(QuoteState, WinningSetAndHistory) {
  const auto cfg = AuctionConfig::make(3, 20);
  auto q = open_auction(cfg);
  FixedTie ties(0);
  BidSet a;
  a.add_at_ask(4, make_bundle({0, 2}), q);
  admit_bids(q, a, cfg, ties);
  BidSet b;
  b.add_at_ask(5, make_bundle({0}), q);
  admit_bids(q, b, cfg, ties);
  EXPECT_EQ(q.winning_set(4), make_bundle({2}));
  EXPECT_EQ(q.winning_set(5), make_bundle({0}));
  ASSERT_EQ(q.history_rows(), 2);
  EXPECT_EQ(std::vector<int>(q.history_row(0).begin(), q.history_row(0).end()),
            (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(std::vector<int>(q.history_row(1).begin(), q.history_row(1).end()),
            (std::vector<int>{2, 0, 1}));
}

}  // namespace
}  // namespace saa
