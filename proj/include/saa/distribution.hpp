#pragma once

#include <optional>
#include <span>
#include <vector>

namespace saa {

/// Mass placed at the price cap whenever an empirical distribution is formed,
/// so conditioning on any reachable lower bound stays well defined.
inline constexpr double kMassFloor = 1e-6;

// Single-good PMFs over prices 0..V (index = price). A `bound` above V means
// the good cannot be won; those calls return std::nullopt.

/// Zero the mass below `bound` and renormalize. Throws std::domain_error if
/// no mass survives.
std::optional<std::vector<double>> condition_marginal(std::span<const double> pmf, int bound);
/// Expected price conditioned on price >= bound.
std::optional<double> expected_price(std::span<const double> pmf, int bound);
/// Expected incremental price for a good the agent is losing at bid price
/// `bid_price`: E[p | p >= bid_price + 1]. nullopt when bid_price = V.
std::optional<double> incremental_price_losing(std::span<const double> pmf, int bid_price);
/// Expected incremental price for a good the agent is winning:
/// (1 - Pr(bid_price | bid_price)) * E[p | p >= bid_price + 2], 0 past the cap.
double incremental_price_winning(std::span<const double> pmf, int bid_price);

/// Per-good final-price distributions, treated as independent across goods.
/// Immutable; precomputes tail sums so the incremental-price queries used
/// inside auctions are O(1).
class MarginalPriceDistribution {
 public:
  MarginalPriceDistribution() = default;
  /// `masses[m][q]` is Pr(p_m = q). Each row must have V + 1 non-negative
  /// entries summing to 1 within 1e-9.
  explicit MarginalPriceDistribution(std::vector<std::vector<double>> masses);

  /// Normalize raw counts or weights per good, then apply the mass floor.
  static MarginalPriceDistribution from_weights(const std::vector<std::vector<double>>& weights,
                                                double floor = kMassFloor);
  static MarginalPriceDistribution point_mass(std::span<const int> prices, int price_cap,
                                              double floor = kMassFloor);
  static MarginalPriceDistribution uniform(int num_goods, int price_cap, double floor = kMassFloor);

  int num_goods() const { return num_goods_; }
  int price_cap() const { return price_cap_; }
  std::span<const double> pmf(int good) const;
  std::vector<std::vector<double>> masses() const;

  double mean(int good) const;
  double stddev(int good) const;

  /// Fast forms of the free functions above, using the cached tail sums.
  std::optional<double> expected_price(int good, int bound) const;
  std::optional<double> incremental_losing(int good, int bid_price) const;
  double incremental_winning(int good, int bid_price) const;

 private:
  int num_goods_ = 0;
  int price_cap_ = 0;
  std::vector<double> mass_;       // num_goods x (V + 1)
  std::vector<double> tail_mass_;  // num_goods x (V + 2): sum_{q >= b} f(q)
  std::vector<double> tail_moment_;  // sum_{q >= b} q f(q)

  std::size_t stride() const { return static_cast<std::size_t>(price_cap_) + 1; }
};

/// Elementwise mean of several distributions of equal shape, renormalized
/// per good after re-applying the mass floor.
MarginalPriceDistribution average(std::span<const MarginalPriceDistribution> dists,
                                  double floor = kMassFloor);

}  // namespace saa
