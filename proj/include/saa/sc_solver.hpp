#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "saa/distribution.hpp"
#include "saa/environment.hpp"
#include "saa/strategy.hpp"

namespace saa {

struct SCSolverParams {
  std::int64_t samples_per_iteration = 1'000'000;
  double ks_threshold = 0.01;
  int max_iterations = 100;
  int smoothing_window = 10;

  void validate() const;
};

struct GoodStats {
  double mean = 0.0;
  double stddev = 0.0;
};

struct SCResult {
  MarginalPriceDistribution distribution;
  bool converged = false;
  int iterations_used = 0;
  std::vector<double> ks_trace;  // ks_marg(F^t, F^{t+1}) for each iteration t
  std::vector<GoodStats> stats;
};

/// Maximum CDF gap between two PMFs over the same price range.
double ks_statistic(std::span<const double> f, std::span<const double> g);
/// Largest per-good KS distance. Throws std::invalid_argument on shape mismatch.
double ks_marg(const MarginalPriceDistribution& a, const MarginalPriceDistribution& b);

/// Exact per-good mean and standard deviation.
std::vector<GoodStats> describe(const MarginalPriceDistribution& dist);

/// Empirical final-price marginals (with the mass floor) from `samples`
/// auctions in which every agent plays `strategy`. Throws SimulationError if
/// any auction fails to quiesce.
MarginalPriceDistribution empirical_marginals(const EnvironmentSpec& env,
                                              const StrategySpec& strategy, std::int64_t samples,
                                              std::uint64_t stream, int workers);
/// Same, with every agent playing PP(dist).
MarginalPriceDistribution empirical_marginals(const EnvironmentSpec& env,
                                              const MarginalPriceDistribution& dist,
                                              std::int64_t samples, std::uint64_t stream,
                                              int workers);

/// Stream used for iteration `iteration` of the solver under `seed`.
std::uint64_t sc_iteration_stream(std::uint64_t seed, int iteration);

/// Iterate F^{t+1} = empirical_marginals(PP(F^t)) from zero prices until the
/// KS_marg distance between input and output drops to the threshold. On
/// success returns F^{t+1}; otherwise the mean of the last k iterates.
/// `progress`, if set, is called with (t, KS) after every iteration.
SCResult derive_sc(const EnvironmentSpec& env, const SCSolverParams& params, int workers = 1,
                   const std::function<void(int, double)>& progress = {});

}  // namespace saa
