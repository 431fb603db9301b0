#pragma once

#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "saa/bundle.hpp"
#include "saa/distribution.hpp"
#include "saa/quotes.hpp"
#include "saa/valuation.hpp"

namespace saa {

/// Pre-auction point prediction of final prices, one integer per good in [0, V].
struct PointPrediction {
  std::vector<int> prices;
};

/// Straightforward bidding: myopic perceived prices.
struct StraightforwardBidding {};

/// PP(pi): perceived price is the larger of the prediction and the myopic price.
struct PointPredictor {
  PointPrediction prediction;
};

/// PP(F): perceived prices are expected incremental prices under F.
struct DistributionPredictor {
  std::shared_ptr<const MarginalPriceDistribution> distribution;
};

using StrategySpec = std::variant<StraightforwardBidding, PointPredictor, DistributionPredictor>;

StrategySpec make_point_predictor(std::vector<int> prices);
StrategySpec make_distribution_predictor(MarginalPriceDistribution dist);

/// Throws std::invalid_argument if the spec's predictions do not match the
/// auction's goods and price cap.
void validate_strategy(const StrategySpec& spec, int num_goods, int price_cap);
std::string describe_strategy(const StrategySpec& spec);

// Perceived-price constructions. `out` must have one slot per good.

/// beta_m if winning m, else beta_m + 1.
void sb_perceived(std::span<const int> bid_prices, Bundle winning, std::span<double> out);
/// max(pi_m, beta_m) if winning m, else max(pi_m, beta_m + 1).
void pp_point_perceived(const PointPrediction& pred, std::span<const int> bid_prices,
                        Bundle winning, std::span<double> out);
/// Delta^W for won goods, Delta^L for the rest. Returns the goods that can
/// no longer be won (losing at the price cap); their `out` entry is left at 0.
Bundle pp_dist_perceived(const MarginalPriceDistribution& dist, std::span<const int> bid_prices,
                         Bundle winning, std::span<double> out);

/// Goods the bidder would have to outbid someone at the price cap to get.
Bundle capped_goods(std::span<const int> bid_prices, Bundle winning, int price_cap);

/// Goods to bid on this round, always at the ask price. Single-unit agents
/// play straightforward bidding whatever `spec` says. Never includes a good
/// the agent is already winning or one it cannot outbid under the cap.
Bundle generate_bids(const StrategySpec& spec, const Valuation& valuation,
                     const QuoteState& quotes, Bundle winning, int price_cap);

}  // namespace saa
