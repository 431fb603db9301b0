#include "fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "oracles.hpp"
#include "saa/auction.hpp"
#include "saa/environment.hpp"

namespace saa::fixture {

KappaReport kappa_bounds(int environments, std::uint64_t seed) {
  KappaReport r;
  const StrategySpec sb = StraightforwardBidding{};
  for (int e = 0; e < environments; ++e) {
    Rng rng(derive_seed({seed, static_cast<std::uint64_t>(e)}));
    const int m = rng.uniform_int(1, 4), n = rng.uniform_int(1, 4);
    oracle::ValueMatrix values(n, std::vector<int>(m));
    std::vector<Valuation> vals;
    for (auto& row : values) {
      std::vector<std::pair<Bundle, int>> entries;
      for (int j = 0; j < m; ++j) {
        row[j] = rng.uniform_int(0, 20);
        entries.push_back({good_bit(j), row[j]});
      }
      vals.emplace_back(TableValuation(m, entries));
    }
    std::vector<Participant> agents;
    for (const auto& v : vals) agents.push_back({&v, &sb});
    RngTieBreaker ties(rng);
    const auto out = run_auction(AuctionConfig::make(m, 20), agents, ties);

    const int kappa = std::min(m, n);
    const auto p_star = oracle::min_ce_prices(values);
    bool bad_price = !out.quiesced;
    for (int j = 0; j < m; ++j) {
      const int gap = std::abs(out.final_prices[j] - p_star[j]);
      r.worst_price_gap = std::max(r.worst_price_gap, gap);
      if (gap > kappa) bad_price = true;
    }
    const long gap = oracle::max_assignment_value(values) - allocation_value(agents, out);
    r.worst_value_gap = std::max(r.worst_value_gap, gap);
    const bool bad_value = gap > static_cast<long>(kappa) * (1 + kappa);
    r.price_violations += bad_price;
    r.value_violations += bad_value;
    if ((bad_price || bad_value) && r.first_failure.empty())
      r.first_failure = "environment " + std::to_string(e);
    ++r.environments;
  }
  return r;
}

ExposureReport exposure_paths() {
  ExposureReport r;
  r.min_surplus = std::numeric_limits<long>::max();
  r.max_surplus = std::numeric_limits<long>::min();
  const auto tables = exposure_example_valuations();
  const std::vector<Valuation> vals(tables.begin(), tables.end());
  const StrategySpec sb = StraightforwardBidding{};
  std::vector<Participant> agents;
  for (const auto& v : vals) agents.push_back({&v, &sb});
  const auto cfg = AuctionConfig::make(3, 20);

  std::vector<std::size_t> script;
  do {
    // Replay the round loop by hand so the complementary agent's bids are
    // visible, then check run_auction agrees on the same choices.
    oracle::ScriptedTieBreaker ties(script);
    QuoteState q = open_auction(cfg);
    bool agent1_bid = false;
    while (q.round < cfg.max_rounds) {
      BidSet bids;
      for (int i = 0; i < 3; ++i) {
        const Bundle goods = generate_bids(sb, vals[i], q, q.winning_set(i), cfg.price_cap);
        if (i == 0 && goods != 0) agent1_bid = true;
        bids.add_at_ask(i, goods, q);
      }
      if (!admit_bids(q, bids, cfg, ties)) break;
    }
    oracle::ScriptedTieBreaker again(ties.choices());
    const auto out = run_auction(cfg, agents, again);
    const Bundle held = q.winning_set(0);
    long s = value(vals[0], held);
    for (int m = 0; m < 3; ++m)
      if (contains(held, m)) s -= q.bid_prices[m];
    if (s != out.surpluses[0] || again.choices() != ties.choices()) ++r.mismatches;

    ++r.runs;
    if (agent1_bid) {
      ++r.agent1_bid;
      if (s >= 0) ++r.agent1_nonnegative;
      r.min_surplus = std::min(r.min_surplus, s);
      r.max_surplus = std::max(r.max_surplus, s);
    }
    script = oracle::next_script(ties.choices(), ties.options());
  } while (!script.empty());
  return r;
}

}  // namespace saa::fixture
