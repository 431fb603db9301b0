#include "saa/valuation.hpp"

#include <array>
#include <cmath>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "saa/environment.hpp"

namespace saa {
namespace {

TEST(SchedulingValuation, ValueIsDeadlineOfLastNeededSlot) {
  const SchedulingValuation v(4, 2, {20, 15, 5});
  EXPECT_EQ(v.value(0), 0);
  EXPECT_EQ(v.value(make_bundle({0})), 0);
  EXPECT_EQ(v.value(make_bundle({0, 1})), 20);
  EXPECT_EQ(v.value(make_bundle({1, 2})), 15);
  EXPECT_EQ(v.value(make_bundle({0, 3})), 5);
  EXPECT_EQ(v.value(make_bundle({0, 1, 2, 3})), 20);
  EXPECT_EQ(v.completion_value(0), 0);
  EXPECT_EQ(v.completion_value(2), 15);
}

TEST(SchedulingValuation, RejectsBadDeadlines) {
  EXPECT_THROW(SchedulingValuation(3, 2, {10}), std::invalid_argument);
  EXPECT_THROW(SchedulingValuation(3, 2, {10, 20}), std::invalid_argument);
  EXPECT_THROW(SchedulingValuation(3, 2, {51, 20}), std::invalid_argument);
  EXPECT_THROW(SchedulingValuation(3, 4, {}), std::invalid_argument);
}

TEST(TableValuation, FreeDisposalClosure) {
  const auto table1 = exposure_example_valuations();
  EXPECT_EQ(table1[0].value(make_bundle({0, 1})), 0);
  EXPECT_EQ(table1[0].value(make_bundle({0, 1, 2})), 15);
  EXPECT_EQ(table1[1].value(make_bundle({1, 2})), 6);
  EXPECT_EQ(table1[2].value(make_bundle({0, 2})), 10);
  EXPECT_FALSE(table1[0].single_unit());
  EXPECT_TRUE(table1[1].single_unit());
  EXPECT_TRUE(table1[2].single_unit());
}

TEST(Surplus, ValueLessPrices) {
  const Valuation v = SchedulingValuation(3, 1, {30, 20, 10});
  const std::vector<int> p = {7, 5, 4};
  EXPECT_EQ(surplus(v, make_bundle({0}), std::span<const int>(p)), 23);
  EXPECT_EQ(surplus(v, make_bundle({1, 2}), std::span<const int>(p)), 11);
  EXPECT_EQ(surplus(v, 0, std::span<const int>(p)), 0);
  const Valuation agent1 = exposure_example_valuations()[0];
  EXPECT_EQ(surplus(agent1, make_bundle({1}), std::span<const int>(p)), -5);
}

TEST(OptimalBundle, TieRules) {
  const Valuation v = SchedulingValuation(3, 1, {10, 10, 10});
  // Every single slot gives 10 - 10 = 0: the empty bundle wins.
  std::vector<double> p = {10, 10, 10};
  EXPECT_EQ(optimal_bundle(v, p, all_goods(3)), kEmptyBundle);
  // Slots 2 and 3 tie at surplus 5: the lower index wins.
  p = {20, 5, 5};
  EXPECT_EQ(optimal_bundle(v, p, all_goods(3)), make_bundle({1}));
  EXPECT_EQ(optimal_bundle(v, p, make_bundle({0, 2})), make_bundle({2}));
  // Within relative 1e-9 counts as tied.
  p = {5 + 1e-12, 5, 20};
  EXPECT_EQ(optimal_bundle(v, p, all_goods(3)), make_bundle({0}));
}

TEST(OptimalBundle, MatchesExhaustiveScanOnScheduling) {
  Rng rng(derive_seed({11}));
  for (int m = 2; m <= 8; ++m) {
    for (int trial = 0; trial < 2000; ++trial) {
      const Valuation v = sample_valuation(PreferenceModel::Uniform, m, rng);
      std::vector<double> p(m);
      for (double& x : p) x = 0.5 * static_cast<double>(rng.uniform_int(0, 40));
      const Bundle avail = static_cast<Bundle>(rng.uniform_index(std::size_t{1} << m));
      ASSERT_EQ(optimal_bundle(v, p, avail), oracle::brute_force_bundle(v, p, avail))
          << "M=" << m << " trial " << trial;
    }
  }
}

TEST(OptimalBundle, MatchesExhaustiveScanOnTables) {
  Rng rng(derive_seed({12}));
  for (int m = 2; m <= 6; ++m) {
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<std::pair<Bundle, int>> entries;
      for (int e = 0; e < 4; ++e)
        entries.push_back({static_cast<Bundle>(1 + rng.uniform_index((std::size_t{1} << m) - 1)),
                           rng.uniform_int(0, 20)});
      const Valuation v = TableValuation(m, entries);
      std::vector<double> p(m);
      for (double& x : p) x = rng.uniform_int(0, 8);
      ASSERT_EQ(optimal_bundle(v, p, all_goods(m)), oracle::brute_force_bundle(v, p, all_goods(m)));
    }
  }
}

TEST(Pruning, Policies) {
  EXPECT_EQ(prune_deadline_values({10, 30, 20}, PruningPolicy::SequentialClamp),
            (std::vector<int>{10, 10, 10}));
  EXPECT_EQ(prune_deadline_values({10, 30, 20}, PruningPolicy::ZeroViolators),
            (std::vector<int>{10, 0, 0}));
  EXPECT_EQ(prune_deadline_values({10, 30, 20}, PruningPolicy::SortDescending),
            (std::vector<int>{30, 20, 10}));
  EXPECT_EQ(prune_deadline_values({40, 30, 35, 5}, PruningPolicy::ZeroViolators),
            (std::vector<int>{40, 30, 0, 0}));
}

TEST(Sampling, ExponentialJobLengths) {
  Rng rng(derive_seed({13}));
  constexpr int kDraws = 400000;
  std::array<int, 6> hist{};
  for (int i = 0; i < kDraws; ++i) ++hist[sample_job_length(PreferenceModel::Exponential, 5, rng)];
  const std::array<double, 6> expected = {0, 0.5, 0.25, 0.125, 0.0625, 0.0625};
  for (int l = 1; l <= 5; ++l)
    EXPECT_NEAR(hist[l] / static_cast<double>(kDraws), expected[l], 0.004) << "length " << l;
}

TEST(Sampling, DrawsAreNonIncreasingAndInRange) {
  Rng rng(derive_seed({14}));
  for (auto policy : {PruningPolicy::SequentialClamp, PruningPolicy::ZeroViolators,
                      PruningPolicy::SortDescending}) {
    for (int i = 0; i < 2000; ++i) {
      const auto v = sample_valuation(PreferenceModel::Uniform, 5, rng, policy);
      const auto d = v.deadline_values();
      ASSERT_EQ(static_cast<int>(d.size()), 5 - v.job_length() + 1);
      for (std::size_t t = 0; t < d.size(); ++t) {
        ASSERT_GE(d[t], 0);
        ASSERT_LE(d[t], 50);
        if (t > 0) ASSERT_LE(d[t], d[t - 1]);
      }
      if (policy != PruningPolicy::ZeroViolators) ASSERT_GE(d.back(), 1);
    }
  }
}

}  // namespace
}  // namespace saa
