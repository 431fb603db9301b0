#include "saa/sc_solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "saa/batch.hpp"
#include "saa/errors.hpp"
#include "saa/strategy.hpp"

namespace saa {

namespace {
constexpr std::uint64_t kSCStreamTag = 0x5343'0000'0000'0001ULL;
}

void SCSolverParams::validate() const {
  if (samples_per_iteration < 1) throw ConfigError("samples_per_iteration", "must be >= 1");
  if (!(ks_threshold > 0.0 && ks_threshold <= 1.0))
    throw ConfigError("ks_threshold", "must be in (0, 1]");
  if (max_iterations < 1) throw ConfigError("max_iterations", "must be >= 1");
  if (smoothing_window < 1 || smoothing_window > max_iterations)
    throw ConfigError("smoothing_window", "must be in [1, max_iterations]");
}

double ks_statistic(std::span<const double> f, std::span<const double> g) {
  if (f.size() != g.size()) throw std::invalid_argument("ks_statistic: support mismatch");
  double cf = 0.0, cg = 0.0, gap = 0.0;
  for (std::size_t q = 0; q < f.size(); ++q) {
    cf += f[q];
    cg += g[q];
    gap = std::max(gap, std::abs(cf - cg));
  }
  return std::min(gap, 1.0);
}

double ks_marg(const MarginalPriceDistribution& a, const MarginalPriceDistribution& b) {
  if (a.num_goods() != b.num_goods() || a.price_cap() != b.price_cap())
    throw std::invalid_argument("ks_marg: distributions differ in goods or price cap");
  double worst = 0.0;
  for (int m = 0; m < a.num_goods(); ++m) worst = std::max(worst, ks_statistic(a.pmf(m), b.pmf(m)));
  return worst;
}

std::vector<GoodStats> describe(const MarginalPriceDistribution& dist) {
  std::vector<GoodStats> out(dist.num_goods());
  for (int m = 0; m < dist.num_goods(); ++m) out[m] = {dist.mean(m), dist.stddev(m)};
  return out;
}

MarginalPriceDistribution empirical_marginals(const EnvironmentSpec& env,
                                              const StrategySpec& strategy, std::int64_t samples,
                                              std::uint64_t stream, int workers) {
  if (samples < 1) throw std::invalid_argument("empirical_marginals: samples must be >= 1");
  const PriceTally tally = workers == 1 ? price_batch_serial(env, strategy, stream, samples)
                                        : price_batch_parallel(env, strategy, stream, samples, workers);
  if (tally.non_quiesced > 0)
    throw SimulationError(std::to_string(tally.non_quiesced) + " of " +
                          std::to_string(tally.games) + " auctions hit max_rounds");
  return MarginalPriceDistribution::from_weights(tally.weights());
}

MarginalPriceDistribution empirical_marginals(const EnvironmentSpec& env,
                                              const MarginalPriceDistribution& dist,
                                              std::int64_t samples, std::uint64_t stream,
                                              int workers) {
  const StrategySpec spec = DistributionPredictor{std::make_shared<const MarginalPriceDistribution>(dist)};
  return empirical_marginals(env, spec, samples, stream, workers);
}

std::uint64_t sc_iteration_stream(std::uint64_t seed, int iteration) {
  return derive_seed({seed, kSCStreamTag, static_cast<std::uint64_t>(iteration)});
}

SCResult derive_sc(const EnvironmentSpec& env, const SCSolverParams& params, int workers,
                   const std::function<void(int, double)>& progress) {
  env.validate();
  params.validate();
  const std::vector<int> zeros(env.num_goods, 0);
  MarginalPriceDistribution current = MarginalPriceDistribution::point_mass(zeros, env.price_cap);

  SCResult result;
  std::vector<MarginalPriceDistribution> recent;
  for (int t = 0; t < params.max_iterations; ++t) {
    MarginalPriceDistribution next = empirical_marginals(
        env, current, params.samples_per_iteration, sc_iteration_stream(env.seed, t), workers);
    const double ks = ks_marg(current, next);
    result.ks_trace.push_back(ks);
    result.iterations_used = t + 1;
    if (progress) progress(t, ks);
    if (ks <= params.ks_threshold) {
      result.converged = true;
      result.distribution = std::move(next);
      result.stats = describe(result.distribution);
      return result;
    }
    recent.push_back(next);
    if (static_cast<int>(recent.size()) > params.smoothing_window) recent.erase(recent.begin());
    current = std::move(next);
  }
  result.distribution = average(recent);
  result.stats = describe(result.distribution);
  return result;
}

}  // namespace saa
