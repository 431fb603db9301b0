#include "saa/batch.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <utility>

#include <omp.h>

#include "saa/errors.hpp"

namespace saa {

PriceTally::PriceTally(int goods, int cap)
    : num_goods(goods), price_cap(cap), counts(static_cast<std::size_t>(goods) * (cap + 1), 0) {}

void PriceTally::merge(const PriceTally& other) {
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
  games += other.games;
  non_quiesced += other.non_quiesced;
  total_rounds += other.total_rounds;
}

std::vector<std::vector<double>> PriceTally::weights() const {
  std::vector<std::vector<double>> w(num_goods);
  const std::size_t stride = static_cast<std::size_t>(price_cap) + 1;
  for (int m = 0; m < num_goods; ++m)
    w[m].assign(counts.begin() + m * stride, counts.begin() + (m + 1) * stride);
  return w;
}

ProfileTally::ProfileTally(std::size_t num_strategies)
    : sum(num_strategies, 0), sum_sq(num_strategies, 0), observations(num_strategies, 0) {}

void ProfileTally::merge(const ProfileTally& other) {
  for (std::size_t s = 0; s < sum.size(); ++s) {
    sum[s] += other.sum[s];
    sum_sq[s] += other.sum_sq[s];
    observations[s] += other.observations[s];
  }
  games += other.games;
  non_quiesced += other.non_quiesced;
  welfare += other.welfare;
  optimal_welfare += other.optimal_welfare;
  max_welfare_gap = std::max(max_welfare_gap, other.max_welfare_gap);
}

AuctionOutcome simulate_game(const EnvironmentSpec& env, std::span<const StrategySpec* const> seats,
                             Rng& rng, std::vector<Valuation>& scratch) {
  sample_agents(env, rng, scratch);
  std::vector<Participant> agents(scratch.size());
  for (std::size_t i = 0; i < agents.size(); ++i) agents[i] = {&scratch[i], seats[i]};
  RngTieBreaker ties(rng);
  return run_auction(env.auction_config(), agents, ties);
}

namespace {

void record_prices(PriceTally& tally, const AuctionOutcome& out) {
  const std::size_t stride = static_cast<std::size_t>(tally.price_cap) + 1;
  for (int m = 0; m < tally.num_goods; ++m) ++tally.counts[m * stride + out.final_prices[m]];
  ++tally.games;
  tally.total_rounds += out.rounds_used;
  if (!out.quiesced) ++tally.non_quiesced;
}

void price_game(const EnvironmentSpec& env, const std::vector<const StrategySpec*>& seats,
                std::uint64_t stream, std::int64_t g, std::vector<Valuation>& scratch,
                PriceTally& tally) {
  Rng rng(derive_seed({stream, static_cast<std::uint64_t>(g)}));
  record_prices(tally, simulate_game(env, seats, rng, scratch));
}

void profile_game(const EnvironmentSpec& env, std::span<const StrategySpec> roster,
                  const std::vector<int>& seat_template, std::uint64_t stream, std::int64_t g,
                  bool track_welfare, std::vector<Valuation>& scratch, ProfileTally& tally) {
  Rng rng(derive_seed({stream, static_cast<std::uint64_t>(g)}));
  std::vector<int> seat_strategy = seat_template;
  for (std::size_t i = seat_strategy.size(); i > 1; --i)
    std::swap(seat_strategy[i - 1], seat_strategy[rng.uniform_index(i)]);
  std::vector<const StrategySpec*> seats(seat_strategy.size());
  for (std::size_t i = 0; i < seats.size(); ++i) seats[i] = &roster[seat_strategy[i]];

  const AuctionOutcome out = simulate_game(env, seats, rng, scratch);
  for (std::size_t i = 0; i < seats.size(); ++i) {
    const long s = out.surpluses[i];
    tally.sum[seat_strategy[i]] += s;
    tally.sum_sq[seat_strategy[i]] += s * s;
    ++tally.observations[seat_strategy[i]];
  }
  ++tally.games;
  if (!out.quiesced) ++tally.non_quiesced;
  if (track_welfare) {
    long realized = 0;
    for (std::size_t i = 0; i < seats.size(); ++i) realized += value(scratch[i], out.holdings[i]);
    const long best = saa::optimal_welfare(scratch);
    tally.welfare += realized;
    tally.optimal_welfare += best;
    tally.max_welfare_gap = std::max<std::int64_t>(tally.max_welfare_gap, best - realized);
  }
}

std::vector<int> seat_template(const EnvironmentSpec& env, std::span<const StrategySpec> roster,
                               std::span<const int> counts) {
  if (counts.size() != roster.size())
    throw std::invalid_argument("profile counts must have one entry per roster strategy");
  std::vector<int> seats;
  for (std::size_t s = 0; s < counts.size(); ++s) {
    if (counts[s] < 0) throw std::invalid_argument("negative profile count");
    seats.insert(seats.end(), counts[s], static_cast<int>(s));
  }
  if (static_cast<int>(seats.size()) != env.num_agents)
    throw std::invalid_argument("profile counts must sum to num_agents");
  return seats;
}

// Runs body(g, thread_state) over [0, games) on `workers` threads, merging
// per-thread tallies. Exceptions are rethrown on the calling thread.
template <class Tally, class MakeTally, class Body>
Tally parallel_games(std::int64_t games, int workers, MakeTally make_tally, Body body) {
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  std::vector<Tally> partial(static_cast<std::size_t>(workers), make_tally());
  std::exception_ptr error;
  std::atomic<bool> failed{false};
#pragma omp parallel num_threads(workers)
  {
    const int tid = omp_get_thread_num();
    std::vector<Valuation> scratch;
    Tally& local = partial[static_cast<std::size_t>(tid)];
#pragma omp for schedule(dynamic, 256)
    for (std::int64_t g = 0; g < games; ++g) {
      if (failed.load(std::memory_order_relaxed)) continue;
      try {
        body(g, scratch, local);
      } catch (...) {
#pragma omp critical(saa_batch_error)
        {
          if (!error) error = std::current_exception();
          failed = true;
        }
      }
    }
  }
  if (error) std::rethrow_exception(error);
  Tally total = make_tally();
  for (const auto& p : partial) total.merge(p);
  return total;
}

}  // namespace

PriceTally price_batch_serial(const EnvironmentSpec& env, const StrategySpec& strategy,
                              std::uint64_t stream, std::int64_t games) {
  validate_strategy(strategy, env.num_goods, env.price_cap);
  const std::vector<const StrategySpec*> seats(env.num_agents, &strategy);
  PriceTally tally(env.num_goods, env.price_cap);
  std::vector<Valuation> scratch;
  for (std::int64_t g = 0; g < games; ++g) price_game(env, seats, stream, g, scratch, tally);
  return tally;
}

PriceTally price_batch_parallel(const EnvironmentSpec& env, const StrategySpec& strategy,
                                std::uint64_t stream, std::int64_t games, int workers) {
  validate_strategy(strategy, env.num_goods, env.price_cap);
  const std::vector<const StrategySpec*> seats(env.num_agents, &strategy);
  return parallel_games<PriceTally>(
      games, workers, [&] { return PriceTally(env.num_goods, env.price_cap); },
      [&](std::int64_t g, std::vector<Valuation>& scratch, PriceTally& tally) {
        price_game(env, seats, stream, g, scratch, tally);
      });
}

ProfileTally profile_batch_serial(const EnvironmentSpec& env, std::span<const StrategySpec> roster,
                                  std::span<const int> counts, std::uint64_t stream,
                                  std::int64_t games, bool track_welfare) {
  for (const auto& s : roster) validate_strategy(s, env.num_goods, env.price_cap);
  const std::vector<int> seats = seat_template(env, roster, counts);
  ProfileTally tally(roster.size());
  std::vector<Valuation> scratch;
  for (std::int64_t g = 0; g < games; ++g)
    profile_game(env, roster, seats, stream, g, track_welfare, scratch, tally);
  return tally;
}

ProfileTally profile_batch_parallel(const EnvironmentSpec& env, std::span<const StrategySpec> roster,
                                    std::span<const int> counts, std::uint64_t stream,
                                    std::int64_t games, int workers, bool track_welfare) {
  for (const auto& s : roster) validate_strategy(s, env.num_goods, env.price_cap);
  const std::vector<int> seats = seat_template(env, roster, counts);
  return parallel_games<ProfileTally>(
      games, workers, [&] { return ProfileTally(roster.size()); },
      [&](std::int64_t g, std::vector<Valuation>& scratch, ProfileTally& tally) {
        profile_game(env, roster, seats, stream, g, track_welfare, scratch, tally);
      });
}

}  // namespace saa
