#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "saa/environment.hpp"
#include "saa/strategy.hpp"

namespace saa {

struct RosterEntry {
  std::string label;
  StrategySpec spec;
};

/// Ordered, uniquely labelled strategy set.
class StrategyRoster {
 public:
  StrategyRoster() = default;
  explicit StrategyRoster(std::vector<RosterEntry> entries);

  std::size_t size() const { return entries_.size(); }
  const RosterEntry& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<RosterEntry>& entries() const { return entries_; }
  std::span<const StrategySpec> specs() const { return specs_; }
  std::vector<std::string> labels() const;
  /// Throws ConfigError("roster", ...) for unknown labels.
  int index_of(const std::string& label) const;
  void validate(int num_goods, int price_cap) const;

 private:
  std::vector<RosterEntry> entries_;
  std::vector<StrategySpec> specs_;
};

/// A symmetric-game profile: how many agents play each roster strategy.
struct Profile {
  std::vector<int> counts;

  int num_agents() const;
  auto operator<=>(const Profile&) const = default;
};

Profile symmetric_profile(std::size_t num_strategies, int num_agents, int s);
/// Profile with one agent moved from strategy `from` to `to`.
Profile deviation_profile(const Profile& p, int from, int to);

struct StrategyPayoff {
  double mean = 0.0;
  double variance = 0.0;  // per-observation sample variance; 0 for one sample
  std::int64_t games = 0;
  std::int64_t observations = 0;
};

/// Payoffs for the strategies present in one profile (indexed by strategy;
/// entries with observations == 0 are absent).
struct PayoffEntry {
  std::vector<StrategyPayoff> payoffs;
};

class EmpiricalGame {
 public:
  EmpiricalGame() = default;
  EmpiricalGame(int num_agents, std::vector<std::string> labels);

  int num_agents() const { return num_agents_; }
  std::size_t num_strategies() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::map<Profile, PayoffEntry>& table() const { return table_; }

  /// Store or replace a profile's payoffs. Throws std::invalid_argument for a
  /// profile not valid for (N, S).
  void insert(const Profile& p, PayoffEntry entry);
  /// Merge another table with the same agents and labels into this one.
  void merge(const EmpiricalGame& other);
  bool contains(const Profile& p) const { return table_.count(p) != 0; }
  const PayoffEntry* find(const Profile& p) const;
  /// Payoff of strategy s in p. Throws IncompleteDataError naming the
  /// profile if p was never estimated.
  const StrategyPayoff& payoff(const Profile& p, int s) const;
  std::string format(const Profile& p) const;

 private:
  int num_agents_ = 0;
  std::vector<std::string> labels_;
  std::map<Profile, PayoffEntry> table_;
};

/// Stream for a profile's games; depends only on the seed and the counts.
std::uint64_t profile_stream(std::uint64_t seed, const Profile& p);

PayoffEntry payoff_entry_from_tally(std::span<const std::int64_t> sum,
                                    std::span<const std::int64_t> sum_sq,
                                    std::span<const std::int64_t> observations, std::int64_t games);

/// Monte Carlo payoff estimate for one profile over `games` auctions.
PayoffEntry estimate_profile(const EnvironmentSpec& env, const StrategyRoster& roster,
                             const Profile& p, std::int64_t games, int workers = 1);

}  // namespace saa
