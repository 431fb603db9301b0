#pragma once

#include <vector>

#include "saa/distribution.hpp"
#include "saa/empirical_game.hpp"

namespace saa {

/// Round each good's mean to the nearest integer, scaled by `scale` and
/// clamped to [0, V].
std::vector<int> scaled_mean_prices(const MarginalPriceDistribution& dist, double scale = 1.0);

/// The stock roster: SB; PP(pi) from zero prices, the SB mean prices, and
/// the SC mean prices scaled by 0.5, 0.75, 1, 1.25, 1.5; PP(F) from the SB
/// distribution, the SC distribution, and a uniform distribution.
StrategyRoster default_roster(const MarginalPriceDistribution& sb_distribution,
                              const MarginalPriceDistribution& sc_distribution);

inline constexpr const char* kScLabel = "PP(F_SC)";
inline constexpr const char* kSbDistLabel = "PP(F_SB)";

}  // namespace saa
