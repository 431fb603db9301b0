#include "saa/distribution.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace saa {

namespace {

int cap_of(std::span<const double> pmf) {
  if (pmf.empty()) throw std::invalid_argument("empty PMF");
  return static_cast<int>(pmf.size()) - 1;
}

}  // namespace

std::optional<std::vector<double>> condition_marginal(std::span<const double> pmf, int bound) {
  const int cap = cap_of(pmf);
  if (bound < 0) bound = 0;
  if (bound > cap) return std::nullopt;
  double survive = 0.0;
  for (int q = bound; q <= cap; ++q) survive += pmf[q];
  if (!(survive > 0.0)) throw std::domain_error("condition_marginal: no mass at or above bound");
  std::vector<double> out(pmf.size(), 0.0);
  for (int q = bound; q <= cap; ++q) out[q] = pmf[q] / survive;
  return out;
}

std::optional<double> expected_price(std::span<const double> pmf, int bound) {
  const auto cond = condition_marginal(pmf, bound);
  if (!cond) return std::nullopt;
  double e = 0.0;
  for (std::size_t q = 0; q < cond->size(); ++q) e += (*cond)[q] * static_cast<double>(q);
  return e;
}

std::optional<double> incremental_price_losing(std::span<const double> pmf, int bid_price) {
  return expected_price(pmf, bid_price + 1);
}

double incremental_price_winning(std::span<const double> pmf, int bid_price) {
  const int cap = cap_of(pmf);
  if (bid_price + 2 > cap) return 0.0;
  const auto at_bid = condition_marginal(pmf, bid_price);
  const double stay = (*at_bid)[bid_price];
  return (1.0 - stay) * *expected_price(pmf, bid_price + 2);
}

MarginalPriceDistribution::MarginalPriceDistribution(std::vector<std::vector<double>> masses) {
  if (masses.empty()) throw std::invalid_argument("distribution: no goods");
  num_goods_ = static_cast<int>(masses.size());
  price_cap_ = static_cast<int>(masses[0].size()) - 1;
  if (price_cap_ < 1) throw std::invalid_argument("distribution: price cap must be >= 1");
  const std::size_t w = stride();
  mass_.reserve(w * num_goods_);
  tail_mass_.assign((w + 1) * num_goods_, 0.0);
  tail_moment_.assign((w + 1) * num_goods_, 0.0);
  for (int m = 0; m < num_goods_; ++m) {
    const auto& row = masses[m];
    if (row.size() != w) throw std::invalid_argument("distribution: ragged mass rows");
    double total = 0.0;
    for (double x : row) {
      if (!(x >= 0.0)) throw std::invalid_argument("distribution: negative or NaN mass");
      total += x;
    }
    if (std::abs(total - 1.0) > 1e-9)
      throw std::invalid_argument("distribution: good " + std::to_string(m + 1) +
                                  " masses sum to " + std::to_string(total));
    mass_.insert(mass_.end(), row.begin(), row.end());
    double* tm = &tail_mass_[m * (w + 1)];
    double* tq = &tail_moment_[m * (w + 1)];
    for (int q = price_cap_; q >= 0; --q) {
      tm[q] = tm[q + 1] + row[q];
      tq[q] = tq[q + 1] + row[q] * q;
    }
  }
}

MarginalPriceDistribution MarginalPriceDistribution::from_weights(
    const std::vector<std::vector<double>>& weights, double floor) {
  std::vector<std::vector<double>> rows;
  rows.reserve(weights.size());
  for (const auto& w : weights) {
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    if (!(total > 0.0)) throw std::invalid_argument("distribution: row has no weight");
    std::vector<double> row(w.size());
    for (std::size_t q = 0; q < w.size(); ++q) row[q] = w[q] / total;
    row.back() += floor;
    for (double& x : row) x /= 1.0 + floor;
    rows.push_back(std::move(row));
  }
  return MarginalPriceDistribution(std::move(rows));
}

MarginalPriceDistribution MarginalPriceDistribution::point_mass(std::span<const int> prices,
                                                                int price_cap, double floor) {
  std::vector<std::vector<double>> w(prices.size(), std::vector<double>(price_cap + 1, 0.0));
  for (std::size_t m = 0; m < prices.size(); ++m) {
    if (prices[m] < 0 || prices[m] > price_cap)
      throw std::invalid_argument("point_mass: price outside [0, V]");
    w[m][prices[m]] = 1.0;
  }
  return from_weights(w, floor);
}

MarginalPriceDistribution MarginalPriceDistribution::uniform(int num_goods, int price_cap,
                                                             double floor) {
  return from_weights(std::vector<std::vector<double>>(num_goods, std::vector<double>(price_cap + 1, 1.0)),
                      floor);
}

std::span<const double> MarginalPriceDistribution::pmf(int good) const {
  return std::span<const double>(mass_).subspan(good * stride(), stride());
}

std::vector<std::vector<double>> MarginalPriceDistribution::masses() const {
  std::vector<std::vector<double>> out;
  for (int m = 0; m < num_goods_; ++m) {
    auto p = pmf(m);
    out.emplace_back(p.begin(), p.end());
  }
  return out;
}

double MarginalPriceDistribution::mean(int good) const {
  return tail_moment_[good * (stride() + 1)];
}

double MarginalPriceDistribution::stddev(int good) const {
  const double mu = mean(good);
  double var = 0.0;
  auto p = pmf(good);
  for (int q = 0; q <= price_cap_; ++q) var += p[q] * (q - mu) * (q - mu);
  return std::sqrt(var);
}

std::optional<double> MarginalPriceDistribution::expected_price(int good, int bound) const {
  if (bound < 0) bound = 0;
  if (bound > price_cap_) return std::nullopt;
  const std::size_t base = good * (stride() + 1);
  const double tm = tail_mass_[base + bound];
  if (!(tm > 0.0)) throw std::domain_error("expected_price: no mass at or above bound");
  return tail_moment_[base + bound] / tm;
}

std::optional<double> MarginalPriceDistribution::incremental_losing(int good, int bid_price) const {
  return expected_price(good, bid_price + 1);
}

double MarginalPriceDistribution::incremental_winning(int good, int bid_price) const {
  if (bid_price + 2 > price_cap_) return 0.0;
  const std::size_t base = good * (stride() + 1);
  const double at_bid = tail_mass_[base + bid_price];
  if (!(at_bid > 0.0)) throw std::domain_error("incremental_winning: no mass at or above bid");
  const double above = tail_mass_[base + bid_price + 2];
  if (!(above > 0.0)) throw std::domain_error("incremental_winning: no mass above bid + 1");
  const double stay = mass_[good * stride() + bid_price] / at_bid;
  return (1.0 - stay) * (tail_moment_[base + bid_price + 2] / above);
}

MarginalPriceDistribution average(std::span<const MarginalPriceDistribution> dists, double floor) {
  if (dists.empty()) throw std::invalid_argument("average: no distributions");
  const int goods = dists[0].num_goods();
  const int cap = dists[0].price_cap();
  std::vector<std::vector<double>> w(goods, std::vector<double>(cap + 1, 0.0));
  for (const auto& d : dists) {
    if (d.num_goods() != goods || d.price_cap() != cap)
      throw std::invalid_argument("average: shape mismatch");
    for (int m = 0; m < goods; ++m) {
      auto p = d.pmf(m);
      for (int q = 0; q <= cap; ++q) w[m][q] += p[q];
    }
  }
  return MarginalPriceDistribution::from_weights(w, floor);
}

}  // namespace saa
