#include "saa/empirical_game.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

#include "saa/batch.hpp"
#include "saa/errors.hpp"

namespace saa {

StrategyRoster::StrategyRoster(std::vector<RosterEntry> entries) : entries_(std::move(entries)) {
  std::set<std::string> seen;
  for (const auto& e : entries_) {
    if (e.label.empty()) throw ConfigError("roster", "empty strategy label");
    if (!seen.insert(e.label).second) throw ConfigError("roster", "duplicate label " + e.label);
    specs_.push_back(e.spec);
  }
}

std::vector<std::string> StrategyRoster::labels() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) out.push_back(e.label);
  return out;
}

int StrategyRoster::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].label == label) return static_cast<int>(i);
  throw ConfigError("roster", "unknown strategy label " + label);
}

void StrategyRoster::validate(int num_goods, int price_cap) const {
  for (const auto& e : entries_) {
    try {
      validate_strategy(e.spec, num_goods, price_cap);
    } catch (const std::invalid_argument& ex) {
      throw ConfigError("roster", e.label + ": " + ex.what());
    }
  }
}

int Profile::num_agents() const { return std::accumulate(counts.begin(), counts.end(), 0); }

Profile symmetric_profile(std::size_t num_strategies, int num_agents, int s) {
  Profile p{std::vector<int>(num_strategies, 0)};
  p.counts.at(s) = num_agents;
  return p;
}

Profile deviation_profile(const Profile& p, int from, int to) {
  Profile q = p;
  if (q.counts.at(from) < 1) throw std::invalid_argument("deviation from a strategy nobody plays");
  --q.counts[from];
  ++q.counts.at(to);
  return q;
}

EmpiricalGame::EmpiricalGame(int num_agents, std::vector<std::string> labels)
    : num_agents_(num_agents), labels_(std::move(labels)) {
  if (num_agents < 1) throw std::invalid_argument("empirical game needs at least one agent");
}

void EmpiricalGame::insert(const Profile& p, PayoffEntry entry) {
  if (p.counts.size() != labels_.size() || p.num_agents() != num_agents_)
    throw std::invalid_argument("profile " + format(p) + " does not fit this game");
  for (int c : p.counts)
    if (c < 0) throw std::invalid_argument("negative profile count");
  if (entry.payoffs.size() != labels_.size())
    throw std::invalid_argument("payoff entry has wrong number of strategies");
  table_[p] = std::move(entry);
}

void EmpiricalGame::merge(const EmpiricalGame& other) {
  if (other.num_agents_ != num_agents_ || other.labels_ != labels_)
    throw std::invalid_argument("cannot merge payoff tables for different games");
  for (const auto& [p, e] : other.table_) table_[p] = e;
}

const PayoffEntry* EmpiricalGame::find(const Profile& p) const {
  auto it = table_.find(p);
  return it == table_.end() ? nullptr : &it->second;
}

const StrategyPayoff& EmpiricalGame::payoff(const Profile& p, int s) const {
  const PayoffEntry* e = find(p);
  if (!e) throw IncompleteDataError("missing profile " + format(p));
  const StrategyPayoff& sp = e->payoffs.at(s);
  if (sp.observations == 0)
    throw IncompleteDataError("profile " + format(p) + " has no payoff for " + labels_.at(s));
  return sp;
}

std::string EmpiricalGame::format(const Profile& p) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t s = 0; s < p.counts.size(); ++s) {
    if (p.counts[s] == 0) continue;
    if (!first) out += ", ";
    first = false;
    out += (s < labels_.size() ? labels_[s] : "#" + std::to_string(s)) + " x" +
           std::to_string(p.counts[s]);
  }
  return out + "}";
}

std::uint64_t profile_stream(std::uint64_t seed, const Profile& p) {
  std::uint64_t h = derive_seed({seed, 0x4547'4100'0000'0001ULL, p.counts.size()});
  for (int c : p.counts) h = derive_seed({h, static_cast<std::uint64_t>(c)});
  return h;
}

PayoffEntry payoff_entry_from_tally(std::span<const std::int64_t> sum,
                                    std::span<const std::int64_t> sum_sq,
                                    std::span<const std::int64_t> observations, std::int64_t games) {
  PayoffEntry entry;
  entry.payoffs.resize(sum.size());
  for (std::size_t s = 0; s < sum.size(); ++s) {
    const std::int64_t n = observations[s];
    if (n == 0) continue;
    StrategyPayoff& sp = entry.payoffs[s];
    sp.observations = n;
    sp.games = games;
    sp.mean = static_cast<double>(sum[s]) / static_cast<double>(n);
    if (n > 1) {
      // Exact centered sum of squares: (n * sum_sq - sum^2) / n.
      const __int128 centered = static_cast<__int128>(n) * sum_sq[s] -
                                static_cast<__int128>(sum[s]) * sum[s];
      sp.variance = static_cast<double>(static_cast<long double>(centered) /
                                        (static_cast<long double>(n) * (n - 1)));
    }
  }
  return entry;
}

PayoffEntry estimate_profile(const EnvironmentSpec& env, const StrategyRoster& roster,
                             const Profile& p, std::int64_t games, int workers) {
  if (games < 1) throw std::invalid_argument("estimate_profile: games must be >= 1");
  const std::uint64_t stream = profile_stream(env.seed, p);
  const ProfileTally t =
      workers == 1 ? profile_batch_serial(env, roster.specs(), p.counts, stream, games)
                   : profile_batch_parallel(env, roster.specs(), p.counts, stream, games, workers);
  if (t.non_quiesced > 0)
    throw SimulationError(std::to_string(t.non_quiesced) + " auctions hit max_rounds");
  return payoff_entry_from_tally(t.sum, t.sum_sq, t.observations, games);
}

}  // namespace saa
