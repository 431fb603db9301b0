#include "saa/strategy.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace saa {

StrategySpec make_point_predictor(std::vector<int> prices) {
  return PointPredictor{PointPrediction{std::move(prices)}};
}

StrategySpec make_distribution_predictor(MarginalPriceDistribution dist) {
  return DistributionPredictor{std::make_shared<const MarginalPriceDistribution>(std::move(dist))};
}

void validate_strategy(const StrategySpec& spec, int num_goods, int price_cap) {
  if (const auto* p = std::get_if<PointPredictor>(&spec)) {
    if (static_cast<int>(p->prediction.prices.size()) != num_goods)
      throw std::invalid_argument("point prediction has wrong number of goods");
    for (int x : p->prediction.prices)
      if (x < 0 || x > price_cap) throw std::invalid_argument("point prediction outside [0, V]");
  } else if (const auto* d = std::get_if<DistributionPredictor>(&spec)) {
    if (!d->distribution) throw std::invalid_argument("distribution predictor without distribution");
    if (d->distribution->num_goods() != num_goods || d->distribution->price_cap() != price_cap)
      throw std::invalid_argument("price distribution shape does not match the auction");
  }
}

std::string describe_strategy(const StrategySpec& spec) {
  if (std::holds_alternative<StraightforwardBidding>(spec)) return "SB";
  if (std::holds_alternative<PointPredictor>(spec)) return "PP(point)";
  return "PP(distribution)";
}

void sb_perceived(std::span<const int> bid_prices, Bundle winning, std::span<double> out) {
  for (std::size_t m = 0; m < bid_prices.size(); ++m)
    out[m] = bid_prices[m] + (contains(winning, static_cast<int>(m)) ? 0 : 1);
}

void pp_point_perceived(const PointPrediction& pred, std::span<const int> bid_prices,
                        Bundle winning, std::span<double> out) {
  for (std::size_t m = 0; m < bid_prices.size(); ++m) {
    const int myopic = bid_prices[m] + (contains(winning, static_cast<int>(m)) ? 0 : 1);
    out[m] = std::max(pred.prices[m], myopic);
  }
}

Bundle pp_dist_perceived(const MarginalPriceDistribution& dist, std::span<const int> bid_prices,
                         Bundle winning, std::span<double> out) {
  Bundle unavailable = 0;
  for (int m = 0; m < static_cast<int>(bid_prices.size()); ++m) {
    if (contains(winning, m)) {
      out[m] = dist.incremental_winning(m, bid_prices[m]);
    } else if (auto d = dist.incremental_losing(m, bid_prices[m])) {
      out[m] = *d;
    } else {
      out[m] = 0.0;
      unavailable |= good_bit(m);
    }
  }
  return unavailable;
}

Bundle capped_goods(std::span<const int> bid_prices, Bundle winning, int price_cap) {
  Bundle capped = 0;
  for (int m = 0; m < static_cast<int>(bid_prices.size()); ++m)
    if (!contains(winning, m) && bid_prices[m] >= price_cap) capped |= good_bit(m);
  return capped;
}

Bundle generate_bids(const StrategySpec& spec, const Valuation& valuation,
                     const QuoteState& quotes, Bundle winning, int price_cap) {
  const int num_goods = quotes.num_goods();
  std::array<double, kMaxGoods> buf{};
  const std::span<double> perceived(buf.data(), static_cast<std::size_t>(num_goods));
  const std::span<const int> beta(quotes.bid_prices);
  Bundle unavailable = capped_goods(beta, winning, price_cap);

  const StrategySpec* effective = &spec;
  static const StrategySpec kStraightforward = StraightforwardBidding{};
  if (is_single_unit(valuation)) effective = &kStraightforward;

  if (const auto* p = std::get_if<PointPredictor>(effective)) {
    pp_point_perceived(p->prediction, beta, winning, perceived);
  } else if (const auto* d = std::get_if<DistributionPredictor>(effective)) {
    unavailable |= pp_dist_perceived(*d->distribution, beta, winning, perceived);
  } else {
    sb_perceived(beta, winning, perceived);
  }

  const Bundle target = optimal_bundle(valuation, perceived, all_goods(num_goods) & ~unavailable);
  return target & ~winning;
}

}  // namespace saa
