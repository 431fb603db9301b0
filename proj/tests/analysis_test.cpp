#include "saa/analysis.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "saa/errors.hpp"

namespace saa {
namespace {

using PayoffFn = std::function<double(int s, const std::vector<int>& counts)>;

EmpiricalGame make_game(int agents, int strategies, const PayoffFn& u, double variance = 0.0) {
  std::vector<std::string> labels;
  for (int s = 0; s < strategies; ++s) labels.push_back("s" + std::to_string(s));
  EmpiricalGame g(agents, labels);
  for (const auto& p : enumerate_profiles(agents, strategies)) {
    PayoffEntry e;
    e.payoffs.resize(strategies);
    for (int s = 0; s < strategies; ++s) {
      if (p.counts[s] == 0) continue;
      e.payoffs[s] = {u(s, p.counts), variance, 100, 100L * p.counts[s]};
    }
    g.insert(p, e);
  }
  return g;
}

// Two-player symmetric game from a row-player matrix.
EmpiricalGame matrix_game(const std::vector<std::vector<double>>& a) {
  const int n = static_cast<int>(a.size());
  return make_game(2, n, [&a, n](int s, const std::vector<int>& c) {
    for (int t = 0; t < n; ++t) {
      const int others = c[t] - (t == s ? 1 : 0);
      if (others > 0) return a[s][t];
    }
    return 0.0;
  });
}

const std::vector<std::vector<double>> kRps = {{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}};
const std::vector<std::vector<double>> kDominant = {{3, 0, 1}, {2, 1, 0}, {4, 2, 3}};

std::vector<int> all_of(int s) {
  std::vector<int> v(s);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

TEST(ProfileCount, KnownValues) {
  EXPECT_EQ(profile_count(5, 53), 4187106u);
  EXPECT_EQ(profile_count(2, 3), 6u);
  EXPECT_EQ(profile_count(1, 1), 1u);
  EXPECT_THROW(profile_count(1000, 1000), std::overflow_error);
}

TEST(EnumerateProfiles, OrderAndCount) {
  const auto ps = enumerate_profiles(2, 3);
  const std::vector<std::vector<int>> want = {{2, 0, 0}, {1, 1, 0}, {1, 0, 1},
                                              {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  ASSERT_EQ(ps.size(), want.size());
  for (std::size_t i = 0; i < ps.size(); ++i) EXPECT_EQ(ps[i].counts, want[i]);
  EXPECT_EQ(enumerate_profiles(5, 6).size(), profile_count(5, 6));
  EXPECT_THROW(enumerate_profiles(5, 53, 1000), std::length_error);
}

TEST(Nash, VerifyAndEpsilon) {
  // Prisoner's dilemma: defect (1) is the unique equilibrium.
  const auto g = matrix_game({{3, 0}, {5, 1}});
  EXPECT_DOUBLE_EQ(verify_pure_symmetric_nash(g, 1), 0.0);
  EXPECT_DOUBLE_EQ(verify_pure_symmetric_nash(g, 0), 2.0);
  const auto e = epsilon_bound(g, Profile{{1, 1}});
  EXPECT_TRUE(e.exact);
  EXPECT_EQ(e.possible, 2);
  EXPECT_DOUBLE_EQ(e.epsilon, 1.0);  // the cooperator gains 1 by defecting
}

TEST(Nash, MissingDataIsReported) {
  EmpiricalGame g(2, {"a", "b"});
  EXPECT_THROW(verify_pure_symmetric_nash(g, 0), IncompleteDataError);
  PayoffEntry e;
  e.payoffs = {{1.0, 0.0, 10, 20}, {}};
  g.insert(Profile{{2, 0}}, e);
  EXPECT_THROW(verify_pure_symmetric_nash(g, 0), IncompleteDataError);
  EXPECT_THROW(epsilon_bound(g, Profile{{2, 0}}), IncompleteDataError);
  PayoffEntry dev;
  dev.payoffs = {{0.5, 0.0, 10, 10}, {0.75, 0.0, 10, 10}};
  g.insert(Profile{{1, 1}}, dev);
  const auto b = epsilon_bound(g, Profile{{2, 0}});
  EXPECT_TRUE(b.exact);
  EXPECT_EQ(b.evaluated, 1);
  EXPECT_DOUBLE_EQ(b.epsilon, 0.0);
  EXPECT_DOUBLE_EQ(verify_pure_symmetric_nash(g, 0), 0.0);
  EXPECT_THROW(epsilon_bound(g, Profile{{0, 2}}), IncompleteDataError);
}

// Straightforward oracle: remove one strictly dominated strategy at a time,
// in the order given by `order`.
std::vector<int> eliminate_one_at_a_time(const EmpiricalGame& g, std::vector<int> alive,
                                         const std::vector<int>& order) {
  auto dominated_by = [&](int a, int b) {
    for (const auto& p : clique_profiles(g, alive)) {
      if (p.counts[a] == 0) continue;
      Profile q = deviation_profile(p, a, b);
      if (!(g.payoff(q, b).mean > g.payoff(p, a).mean)) return false;
    }
    return true;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a : order) {
      if (std::find(alive.begin(), alive.end(), a) == alive.end()) continue;
      for (int b : alive) {
        if (b == a || !dominated_by(a, b)) continue;
        alive.erase(std::find(alive.begin(), alive.end(), a));
        changed = true;
        break;
      }
      if (changed) break;
    }
  }
  std::sort(alive.begin(), alive.end());
  return alive;
}

TEST(Dominance, DominantStrategySurvivesAlone) {
  const auto g = matrix_game(kDominant);
  EXPECT_EQ(iterated_dominance(g, all_of(3)), (std::vector<int>{2}));
  EXPECT_EQ(iterated_dominance(matrix_game(kRps), all_of(3)), all_of(3));
}

TEST(Dominance, MatchesOneAtATimeInAnyOrder) {
  Rng rng(derive_seed({51}));
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<double> table(4096);
    for (double& x : table) x = rng.uniform_int(0, 12);
    const auto g = make_game(3, 4, [&table](int s, const std::vector<int>& c) {
      return table[(((s * 4 + c[0]) * 4 + c[1]) * 4 + c[2]) % 4096];
    });
    const auto fast = iterated_dominance(g, all_of(4));
    std::vector<int> order = all_of(4);
    do {
      ASSERT_EQ(eliminate_one_at_a_time(g, all_of(4), order), fast) << "trial " << trial;
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST(Replicator, RockPaperScissorsStaysUniform) {
  const auto r = replicator_dynamics(matrix_game(kRps), all_of(3));
  EXPECT_TRUE(r.converged);
  for (double x : r.mixture) EXPECT_NEAR(x, 1.0 / 3.0, 1e-6);
  EXPECT_NEAR(r.regret, 0.0, 1e-9);
}

TEST(Replicator, ConvergesToDominantPointMass) {
  ReplicatorOptions opt;
  opt.tol = 1e-12;
  for (double shift : {-1.0, -5.0}) {
    opt.shift = shift;
    const auto r = replicator_dynamics(matrix_game(kDominant), all_of(3), {}, opt);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.mixture[2], 1.0, 1e-8);
  }
}

TEST(Replicator, ShiftInvariantFixedPoint) {
  // Hawk-dove: the symmetric equilibrium mixes 1/2 hawk.
  const auto g = matrix_game({{-1, 2}, {0, 1}});
  ReplicatorOptions a, b;
  a.shift = -2.0;
  b.shift = -10.0;
  const auto ra = replicator_dynamics(g, all_of(2), {0.2, 0.8}, a);
  const auto rb = replicator_dynamics(g, all_of(2), {0.2, 0.8}, b);
  EXPECT_NEAR(ra.mixture[0], 0.5, 1e-6);
  EXPECT_NEAR(rb.mixture[0], 0.5, 1e-6);
}

TEST(Replicator, RegretMatchesTupleOracle) {
  Rng rng(derive_seed({52}));
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> table(4096);
    for (double& x : table) x = rng.uniform01() * 10.0;
    const auto g = make_game(4, 3, [&table](int s, const std::vector<int>& c) {
      return table[((s * 8 + c[0]) * 8 + c[1]) * 8 + c[2]];
    });
    const auto mix = uniform_mixture(3, all_of(3), 0.5, trial);
    EXPECT_NEAR(std::accumulate(mix.begin(), mix.end(), 0.0), 1.0, 1e-12);
    EXPECT_NEAR(mixture_regret(g, all_of(3), mix), oracle::tuple_regret(g, all_of(3), mix), 1e-9);
  }
}

TEST(Bootstrap, DegenerateVariance) {
  const auto pd = matrix_game({{3, 0}, {5, 1}});
  const auto nash = bootstrap_gain(pd, 1, 200, 7);
  EXPECT_EQ(nash.nash_probability, 1.0);
  EXPECT_EQ(nash.epsilon, 0.0);
  EXPECT_EQ(nash.best_deviation, -1);
  const auto coop = bootstrap_gain(pd, 0, 200, 7);
  EXPECT_EQ(coop.nash_probability, 0.0);
  EXPECT_DOUBLE_EQ(coop.gain_percent, 100.0 * 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(coop.adjusted_gain_percent, coop.gain_percent);
  EXPECT_EQ(coop.best_deviation, 1);
}

TEST(Bootstrap, NoiseBlursAWeakEquilibrium) {
  // All-0 wins by a hair against payoffs with large variance.
  const auto g = make_game(2, 2, [](int s, const std::vector<int>& c) {
    if (c[0] == 2) return 1.0;
    return s == 1 ? 0.99 : 0.5;
  }, 4.0);
  const auto r = bootstrap_gain(g, 0, 2000, 9);
  EXPECT_EQ(r.epsilon, 0.0);
  EXPECT_GT(r.nash_probability, 0.4);
  EXPECT_LT(r.nash_probability, 0.7);
  EXPECT_GT(r.adjusted_gain_percent, 0.0);
  EXPECT_EQ(bootstrap_gain(g, 0, 2000, 9).nash_probability, r.nash_probability);
}

}  // namespace
}  // namespace saa
