#pragma once

// Monte Carlo batch kernels. Each game g draws everything it needs (valuations,
// seat order, tie-breaks) from its own generator seeded by derive_seed({stream,
// g}), and results are accumulated as integers, so the parallel kernels produce
// exactly the serial reference's tallies for any worker count.

#include <cstdint>
#include <span>
#include <vector>

#include "saa/auction.hpp"
#include "saa/environment.hpp"
#include "saa/strategy.hpp"

namespace saa {

/// Histogram of final prices: counts[m * (V + 1) + q].
struct PriceTally {
  int num_goods = 0;
  int price_cap = 0;
  std::vector<std::int64_t> counts;
  std::int64_t games = 0;
  std::int64_t non_quiesced = 0;
  std::int64_t total_rounds = 0;

  PriceTally() = default;
  PriceTally(int goods, int cap);
  void merge(const PriceTally& other);
  std::vector<std::vector<double>> weights() const;
  friend bool operator==(const PriceTally&, const PriceTally&) = default;
};

/// Surplus sums per roster strategy. The welfare fields are filled only when
/// requested: realized and optimal allocation value summed over games, and
/// the largest per-game shortfall.
struct ProfileTally {
  std::vector<std::int64_t> sum;
  std::vector<std::int64_t> sum_sq;
  std::vector<std::int64_t> observations;
  std::int64_t games = 0;
  std::int64_t non_quiesced = 0;
  std::int64_t welfare = 0;
  std::int64_t optimal_welfare = 0;
  std::int64_t max_welfare_gap = 0;

  ProfileTally() = default;
  explicit ProfileTally(std::size_t num_strategies);
  void merge(const ProfileTally& other);
  friend bool operator==(const ProfileTally&, const ProfileTally&) = default;
};

/// One game: fresh valuations, `seats[i]` is agent i's strategy.
AuctionOutcome simulate_game(const EnvironmentSpec& env, std::span<const StrategySpec* const> seats,
                             Rng& rng, std::vector<Valuation>& scratch);

/// All agents play `strategy`; games [0, games) of `stream`.
PriceTally price_batch_serial(const EnvironmentSpec& env, const StrategySpec& strategy,
                              std::uint64_t stream, std::int64_t games);
PriceTally price_batch_parallel(const EnvironmentSpec& env, const StrategySpec& strategy,
                                std::uint64_t stream, std::int64_t games, int workers);

/// `counts[s]` agents play roster[s]; seats are shuffled every game.
ProfileTally profile_batch_serial(const EnvironmentSpec& env, std::span<const StrategySpec> roster,
                                  std::span<const int> counts, std::uint64_t stream,
                                  std::int64_t games, bool track_welfare = false);
ProfileTally profile_batch_parallel(const EnvironmentSpec& env, std::span<const StrategySpec> roster,
                                    std::span<const int> counts, std::uint64_t stream,
                                    std::int64_t games, int workers, bool track_welfare = false);

}  // namespace saa
