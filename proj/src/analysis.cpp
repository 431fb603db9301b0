#include "saa/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "saa/errors.hpp"
#include "saa/rng.hpp"

namespace saa {

std::uint64_t profile_count(int num_agents, int num_strategies) {
  if (num_agents < 1 || num_strategies < 1)
    throw std::invalid_argument("profile_count needs N >= 1 and S >= 1");
  // C(n, k) with k = min(N, S - 1), built up as C(n - k + i, i).
  const std::uint64_t n = static_cast<std::uint64_t>(num_agents) + num_strategies - 1;
  const std::uint64_t k = std::min<std::uint64_t>(num_agents, num_strategies - 1);
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("profile count exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(c);
}

namespace {

void enumerate_into(int remaining, std::size_t pos, std::vector<int>& counts,
                    std::vector<Profile>& out) {
  if (pos + 1 == counts.size()) {
    counts[pos] = remaining;
    out.push_back(Profile{counts});
    return;
  }
  for (int c = remaining; c >= 0; --c) {
    counts[pos] = c;
    enumerate_into(remaining - c, pos + 1, counts, out);
  }
  counts[pos] = 0;
}

// Multisets of `size` agents over the clique, as roster-sized count vectors.
std::vector<Profile> multisets_over(std::size_t num_strategies, const std::vector<int>& clique,
                                    int size) {
  std::vector<Profile> local;
  if (clique.empty()) return local;
  std::vector<int> counts(clique.size(), 0);
  enumerate_into(size, 0, counts, local);
  std::vector<Profile> out;
  out.reserve(local.size());
  for (const auto& l : local) {
    Profile p{std::vector<int>(num_strategies, 0)};
    for (std::size_t i = 0; i < clique.size(); ++i) p.counts[clique[i]] = l.counts[i];
    out.push_back(std::move(p));
  }
  return out;
}

void check_clique(const EmpiricalGame& game, const std::vector<int>& clique) {
  if (clique.empty()) throw std::invalid_argument("empty clique");
  std::vector<int> sorted = clique;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("clique lists a strategy twice");
  for (int s : clique)
    if (s < 0 || s >= static_cast<int>(game.num_strategies()))
      throw std::invalid_argument("clique strategy out of range");
}

}  // namespace

std::vector<Profile> enumerate_profiles(int num_agents, int num_strategies, std::uint64_t limit) {
  if (profile_count(num_agents, num_strategies) > limit)
    throw std::length_error("too many profiles to enumerate");
  std::vector<Profile> out;
  std::vector<int> counts(num_strategies, 0);
  enumerate_into(num_agents, 0, counts, out);
  return out;
}

std::vector<Profile> clique_profiles(const EmpiricalGame& game, const std::vector<int>& clique) {
  check_clique(game, clique);
  return multisets_over(game.num_strategies(), clique, game.num_agents());
}

void require_complete(const EmpiricalGame& game, const std::vector<int>& clique) {
  std::string missing;
  int n = 0;
  for (const auto& p : clique_profiles(game, clique)) {
    if (game.contains(p)) continue;
    if (n < 20) missing += (n ? ", " : "") + game.format(p);
    ++n;
  }
  if (n > 0)
    throw IncompleteDataError("clique is incomplete: " + std::to_string(n) +
                              " missing profiles: " + missing + (n > 20 ? ", ..." : ""));
}

double verify_pure_symmetric_nash(const EmpiricalGame& game, int s) {
  const int num_strategies = static_cast<int>(game.num_strategies());
  const Profile all_s = symmetric_profile(num_strategies, game.num_agents(), s);
  const double base = game.payoff(all_s, s).mean;
  double eps = 0.0;
  for (int d = 0; d < num_strategies; ++d) {
    if (d == s) continue;
    const Profile dev = deviation_profile(all_s, s, d);
    eps = std::max(eps, game.payoff(dev, d).mean - base);
  }
  return eps;
}

EpsilonBound epsilon_bound(const EmpiricalGame& game, const Profile& p) {
  const int num_strategies = static_cast<int>(game.num_strategies());
  EpsilonBound out;
  const PayoffEntry* here = game.find(p);
  if (!here) throw IncompleteDataError("profile " + game.format(p) + " has not been estimated");
  for (int from = 0; from < num_strategies; ++from) {
    if (p.counts.at(from) == 0) continue;
    const double stay = here->payoffs.at(from).mean;
    for (int to = 0; to < num_strategies; ++to) {
      if (to == from) continue;
      ++out.possible;
      const PayoffEntry* dev = game.find(deviation_profile(p, from, to));
      if (!dev) continue;
      ++out.evaluated;
      out.epsilon = std::max(out.epsilon, dev->payoffs.at(to).mean - stay);
    }
  }
  if (out.evaluated == 0 && out.possible > 0)
    throw IncompleteDataError("no deviation from " + game.format(p) + " has been estimated");
  out.exact = out.evaluated == out.possible;
  return out;
}

std::vector<int> iterated_dominance(const EmpiricalGame& game, const std::vector<int>& clique) {
  require_complete(game, clique);
  const std::size_t num_strategies = game.num_strategies();
  std::vector<int> alive = clique;
  std::sort(alive.begin(), alive.end());

  // Strict dominance among pure strategies is order independent, so each
  // pass removes every currently dominated strategy at once.
  for (bool changed = true; changed && alive.size() > 1;) {
    changed = false;
    const auto opponents = multisets_over(num_strategies, alive, game.num_agents() - 1);
    std::vector<int> survivors;
    for (int b : alive) {
      bool dominated = false;
      for (int a : alive) {
        if (a == b) continue;
        bool strictly_better = true;
        for (const auto& o : opponents) {
          Profile with_a = o, with_b = o;
          ++with_a.counts[a];
          ++with_b.counts[b];
          if (!(game.payoff(with_a, a).mean > game.payoff(with_b, b).mean)) {
            strictly_better = false;
            break;
          }
        }
        if (strictly_better) {
          dominated = true;
          break;
        }
      }
      if (!dominated) survivors.push_back(b);
    }
    changed = survivors.size() != alive.size();
    alive = std::move(survivors);
  }
  return alive;
}

namespace {

struct OpponentTable {
  std::vector<Profile> opponents;           // roster-sized counts, N - 1 agents
  std::vector<double> multinomial;          // (N-1)! / prod c_j!
  std::vector<std::vector<double>> payoff;  // [clique index][opponent]
};

OpponentTable build_opponents(const EmpiricalGame& game, const std::vector<int>& clique) {
  require_complete(game, clique);
  OpponentTable t;
  t.opponents = multisets_over(game.num_strategies(), clique, game.num_agents() - 1);
  const auto log_fact = [](int n) { return std::lgamma(n + 1.0); };
  for (const auto& o : t.opponents) {
    double lg = log_fact(game.num_agents() - 1);
    for (int s : clique) lg -= log_fact(o.counts[s]);
    t.multinomial.push_back(std::round(std::exp(lg)));
  }
  t.payoff.resize(clique.size());
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (const auto& o : t.opponents) {
      Profile p = o;
      ++p.counts[clique[i]];
      t.payoff[i].push_back(game.payoff(p, clique[i]).mean);
    }
  return t;
}

std::vector<double> clique_payoffs(const OpponentTable& t, const std::vector<int>& clique,
                                   const MixedStrategy& x) {
  std::vector<double> prob(t.opponents.size());
  for (std::size_t k = 0; k < t.opponents.size(); ++k) {
    double pr = t.multinomial[k];
    for (int s : clique) {
      const int c = t.opponents[k].counts[s];
      if (c > 0) pr *= std::pow(x[s], c);
    }
    prob[k] = pr;
  }
  std::vector<double> u(clique.size(), 0.0);
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (std::size_t k = 0; k < prob.size(); ++k) u[i] += prob[k] * t.payoff[i][k];
  return u;
}

void check_mixture(const EmpiricalGame& game, const std::vector<int>& clique, const MixedStrategy& x) {
  if (x.size() != game.num_strategies())
    throw std::invalid_argument("mixture must have one entry per roster strategy");
  double total = 0.0;
  std::vector<bool> in_clique(x.size(), false);
  for (int s : clique) in_clique[s] = true;
  for (std::size_t s = 0; s < x.size(); ++s) {
    if (!(x[s] >= 0.0)) throw std::invalid_argument("mixture has a negative entry");
    if (!in_clique[s] && x[s] != 0.0) throw std::invalid_argument("mixture puts mass outside the clique");
    total += x[s];
  }
  if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("mixture does not sum to 1");
}

double regret_of(const std::vector<int>& clique, const MixedStrategy& x, const std::vector<double>& u) {
  double avg = 0.0, best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < clique.size(); ++i) {
    avg += x[clique[i]] * u[i];
    best = std::max(best, u[i]);
  }
  return best - avg;
}

}  // namespace

std::vector<double> payoffs_against_mixture(const EmpiricalGame& game,
                                            const std::vector<int>& clique,
                                            const MixedStrategy& mixture) {
  check_clique(game, clique);
  check_mixture(game, clique, mixture);
  const OpponentTable t = build_opponents(game, clique);
  const auto u = clique_payoffs(t, clique, mixture);
  std::vector<double> out(game.num_strategies(), 0.0);
  for (std::size_t i = 0; i < clique.size(); ++i) out[clique[i]] = u[i];
  return out;
}

double mixture_regret(const EmpiricalGame& game, const std::vector<int>& clique,
                      const MixedStrategy& mixture) {
  check_clique(game, clique);
  check_mixture(game, clique, mixture);
  const OpponentTable t = build_opponents(game, clique);
  return regret_of(clique, mixture, clique_payoffs(t, clique, mixture));
}

MixedStrategy uniform_mixture(std::size_t num_strategies, const std::vector<int>& clique,
                              double jitter, std::uint64_t seed) {
  MixedStrategy x(num_strategies, 0.0);
  Rng rng(seed);
  double total = 0.0;
  for (int s : clique) {
    x.at(s) = 1.0 / static_cast<double>(clique.size()) + (jitter > 0.0 ? jitter * rng.uniform01() : 0.0);
    total += x[s];
  }
  for (double& v : x) v /= total;
  return x;
}

ReplicatorResult replicator_dynamics(const EmpiricalGame& game, const std::vector<int>& clique,
                                     MixedStrategy init, const ReplicatorOptions& options) {
  check_clique(game, clique);
  if (init.empty()) init = uniform_mixture(game.num_strategies(), clique);
  check_mixture(game, clique, init);
  if (options.max_steps < 0 || !(options.tol >= 0.0))
    throw std::invalid_argument("replicator: bad options");
  const OpponentTable t = build_opponents(game, clique);

  double shift = 0.0;
  if (options.shift) {
    shift = *options.shift;
  } else {
    double lo = std::numeric_limits<double>::infinity();
    for (const auto& row : t.payoff)
      for (double u : row) lo = std::min(lo, u);
    shift = lo - 1.0;
  }

  ReplicatorResult r;
  MixedStrategy x = std::move(init);
  while (r.steps < options.max_steps) {
    const auto u = clique_payoffs(t, clique, x);
    double norm = 0.0;
    std::vector<double> next(clique.size());
    for (std::size_t i = 0; i < clique.size(); ++i) {
      const double fitness = u[i] - shift;
      if (!(fitness > 0.0)) throw std::domain_error("replicator: payoff shift leaves a non-positive fitness");
      next[i] = x[clique[i]] * fitness;
      norm += next[i];
    }
    double change = 0.0;
    for (std::size_t i = 0; i < clique.size(); ++i) {
      const double v = next[i] / norm;
      change = std::max(change, std::abs(v - x[clique[i]]));
      x[clique[i]] = v;
    }
    ++r.steps;
    r.last_change = change;
    if (change <= options.tol) {
      r.converged = true;
      break;
    }
  }
  r.regret = regret_of(clique, x, clique_payoffs(t, clique, x));
  r.mixture = std::move(x);
  return r;
}

BootstrapResult bootstrap_gain(const EmpiricalGame& game, int s, int resamples, std::uint64_t seed) {
  if (resamples < 1) throw std::invalid_argument("bootstrap_gain: resamples must be >= 1");
  const int num_strategies = static_cast<int>(game.num_strategies());
  const Profile all_s = symmetric_profile(num_strategies, game.num_agents(), s);
  const StrategyPayoff base = game.payoff(all_s, s);
  std::vector<int> deviators;
  std::vector<StrategyPayoff> dev;
  for (int d = 0; d < num_strategies; ++d) {
    if (d == s) continue;
    deviators.push_back(d);
    dev.push_back(game.payoff(deviation_profile(all_s, s, d), d));
  }

  BootstrapResult out;
  for (std::size_t i = 0; i < dev.size(); ++i) {
    const double g = dev[i].mean - base.mean;
    if (g > out.epsilon) {
      out.epsilon = g;
      out.best_deviation = deviators[i];
    }
  }
  const double scale = std::abs(base.mean);
  const double to_percent = scale > 0.0 ? 100.0 / scale : std::numeric_limits<double>::quiet_NaN();
  out.gain_percent = out.epsilon * to_percent;

  Rng rng(seed);
  // Each of the 30 draws stands for one batch of the estimate, so their
  // average carries the sampling variance of the payoff mean.
  const auto resample = [&](const StrategyPayoff& p) {
    if (p.variance <= 0.0 || p.observations < 1) return p.mean;
    const double sd = std::sqrt(kBootstrapObservations * p.variance / static_cast<double>(p.observations));
    double acc = 0.0;
    for (int k = 0; k < kBootstrapObservations; ++k) acc += p.mean + sd * rng.normal();
    return acc / kBootstrapObservations;
  };
  double gain_sum = 0.0;
  int nash = 0;
  for (int r = 0; r < resamples; ++r) {
    const double b = resample(base);
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& d : dev) best = std::max(best, resample(d) - b);
    if (dev.empty() || best <= 0.0) ++nash;
    gain_sum += std::max(0.0, dev.empty() ? 0.0 : best);
  }
  out.adjusted_gain_percent = gain_sum / resamples * to_percent;
  out.nash_probability = static_cast<double>(nash) / resamples;
  return out;
}

}  // namespace saa
