#include "saa/roster.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace saa {

std::vector<int> scaled_mean_prices(const MarginalPriceDistribution& dist, double scale) {
  std::vector<int> out(dist.num_goods());
  for (int m = 0; m < dist.num_goods(); ++m) {
    const long r = std::lround(scale * dist.mean(m));
    out[m] = static_cast<int>(std::clamp<long>(r, 0, dist.price_cap()));
  }
  return out;
}

StrategyRoster default_roster(const MarginalPriceDistribution& sb_distribution,
                              const MarginalPriceDistribution& sc_distribution) {
  if (sb_distribution.num_goods() != sc_distribution.num_goods() ||
      sb_distribution.price_cap() != sc_distribution.price_cap())
    throw std::invalid_argument("default_roster: SB and SC distributions differ in shape");
  const int goods = sc_distribution.num_goods();
  const int cap = sc_distribution.price_cap();

  std::vector<RosterEntry> r;
  r.push_back({"SB", StraightforwardBidding{}});
  r.push_back({"PP(pi_0)", make_point_predictor(std::vector<int>(goods, 0))});
  r.push_back({"PP(pi_SB)", make_point_predictor(scaled_mean_prices(sb_distribution))});
  r.push_back({"PP(pi_SC)", make_point_predictor(scaled_mean_prices(sc_distribution))});
  r.push_back({"PP(0.5pi_SC)", make_point_predictor(scaled_mean_prices(sc_distribution, 0.5))});
  r.push_back({"PP(0.75pi_SC)", make_point_predictor(scaled_mean_prices(sc_distribution, 0.75))});
  r.push_back({"PP(1.25pi_SC)", make_point_predictor(scaled_mean_prices(sc_distribution, 1.25))});
  r.push_back({"PP(1.5pi_SC)", make_point_predictor(scaled_mean_prices(sc_distribution, 1.5))});
  r.push_back({kSbDistLabel, make_distribution_predictor(sb_distribution)});
  r.push_back({kScLabel, make_distribution_predictor(sc_distribution)});
  r.push_back({"PP(F_U)", make_distribution_predictor(MarginalPriceDistribution::uniform(goods, cap))});
  return StrategyRoster(std::move(r));
}

}  // namespace saa
