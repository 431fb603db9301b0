#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "saa/empirical_game.hpp"

namespace saa {

/// C(N + S - 1, N). Throws std::overflow_error past 2^64 - 1.
std::uint64_t profile_count(int num_agents, int num_strategies);

/// Every size-N multiset over S strategies, in lexicographically decreasing
/// count order. Refuses (std::length_error) to materialize more than
/// `limit` profiles.
std::vector<Profile> enumerate_profiles(int num_agents, int num_strategies,
                                        std::uint64_t limit = 10'000'000);

/// Profiles over `clique` only (roster-sized count vectors).
std::vector<Profile> clique_profiles(const EmpiricalGame& game, const std::vector<int>& clique);
/// Throws IncompleteDataError listing missing clique profiles.
void require_complete(const EmpiricalGame& game, const std::vector<int>& clique);

/// Largest gain from a unilateral deviation away from all-s, floored at 0.
/// Zero certifies all-s as a (sample) symmetric pure Nash equilibrium.
double verify_pure_symmetric_nash(const EmpiricalGame& game, int s);

struct EpsilonBound {
  double epsilon = 0.0;     // best evaluated deviation gain, floored at 0
  bool exact = false;       // every possible deviation was evaluated
  int evaluated = 0;
  int possible = 0;
};

/// Lower bound on the epsilon that makes `p` an epsilon-Nash profile, from
/// the deviations present in the table. Throws IncompleteDataError when no
/// deviation from `p` (or `p` itself) has been estimated.
EpsilonBound epsilon_bound(const EmpiricalGame& game, const Profile& p);

/// Iterated elimination of strictly dominated pure strategies in the
/// symmetric subgame over `clique`. Returns survivors in roster order.
std::vector<int> iterated_dominance(const EmpiricalGame& game, const std::vector<int>& clique);

/// Probability vector over roster strategies.
using MixedStrategy = std::vector<double>;

struct ReplicatorOptions {
  int max_steps = 100'000;
  double tol = 1e-10;
  /// Payoffs are shifted by -shift before the multiplicative update; by
  /// default shift = (smallest clique payoff) - 1.
  std::optional<double> shift;
};

struct ReplicatorResult {
  MixedStrategy mixture;
  int steps = 0;
  bool converged = false;
  double last_change = 0.0;  // max component change in the final step
  double regret = 0.0;       // best pure reply payoff minus mixture payoff
};

/// Expected payoff of each clique strategy when the other N - 1 agents draw
/// iid from `mixture`. Indexed by roster strategy (0 outside the clique).
std::vector<double> payoffs_against_mixture(const EmpiricalGame& game,
                                            const std::vector<int>& clique,
                                            const MixedStrategy& mixture);
double mixture_regret(const EmpiricalGame& game, const std::vector<int>& clique,
                      const MixedStrategy& mixture);

/// Discrete-time replicator dynamics restricted to `clique`. `init` must be
/// supported on the clique; empty means uniform over it.
ReplicatorResult replicator_dynamics(const EmpiricalGame& game, const std::vector<int>& clique,
                                     MixedStrategy init = {}, const ReplicatorOptions& options = {});

/// Uniform mixture over `clique`, optionally jittered by up to `jitter`
/// per component before renormalizing.
MixedStrategy uniform_mixture(std::size_t num_strategies, const std::vector<int>& clique,
                              double jitter = 0.0, std::uint64_t seed = 0);

inline constexpr int kBootstrapObservations = 30;

struct BootstrapResult {
  double epsilon = 0.0;            // point estimate, absolute
  double gain_percent = 0.0;       // point estimate, % of the all-s payoff
  double adjusted_gain_percent = 0.0;
  double nash_probability = 0.0;
  int best_deviation = -1;         // strategy with the largest point gain, -1 if none
};

/// Sampling-error adjustment for the all-s candidate. Each resample replaces
/// every relevant payoff by the mean of 30 normal draws centred on the
/// payoff, scaled so the average has the estimate's sampling variance
/// (variance / observations); reports the mean (non-negative) best-deviation
/// gain as a percentage of |all-s payoff| and the fraction of resamples in
/// which no deviation gains.
BootstrapResult bootstrap_gain(const EmpiricalGame& game, int s, int resamples, std::uint64_t seed);

}  // namespace saa
