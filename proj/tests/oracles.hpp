#pragma once

// Independent reference implementations used only by the tests.

#include <cstddef>
#include <vector>

#include "saa/analysis.hpp"
#include "saa/bundle.hpp"
#include "saa/quotes.hpp"
#include "saa/valuation.hpp"

namespace saa::oracle {

/// Exhaustive 2^M scan with the same tie rule as optimal_bundle.
Bundle brute_force_bundle(const Valuation& v, std::span<const double> prices, Bundle available);

/// Unit-demand assignment: value[i][j] is agent i's value for good j.
using ValueMatrix = std::vector<std::vector<int>>;

/// Maximum total value over partial one-to-one assignments, by exhaustive
/// search. `copies[j]` is how many identical units of good j exist.
long max_assignment_value(const ValueMatrix& value, const std::vector<int>& copies);
long max_assignment_value(const ValueMatrix& value);
/// Minimum competitive-equilibrium prices: W(goods + a copy of j) - W(goods).
std::vector<int> min_ce_prices(const ValueMatrix& value);
/// Componentwise-minimum integer CE price vector over [0, cap]^M, found by
/// checking every price vector. Only for tiny instances.
std::vector<int> brute_force_min_ce_prices(const ValueMatrix& value, int cap);

/// Plays back a fixed prefix of tie-break choices, then picks 0, recording
/// how many options every call offered. Drives an exhaustive DFS over all
/// tie-break outcomes.
class ScriptedTieBreaker final : public TieBreaker {
 public:
  explicit ScriptedTieBreaker(std::vector<std::size_t> script) : script_(std::move(script)) {}
  std::size_t pick(std::size_t n) override;
  const std::vector<std::size_t>& choices() const { return choices_; }
  const std::vector<std::size_t>& options() const { return options_; }

 private:
  std::vector<std::size_t> script_;
  std::vector<std::size_t> choices_;
  std::vector<std::size_t> options_;
};

/// Next script in depth-first order after a run that made `choices` out of
/// `options`; empty when the tree is exhausted.
std::vector<std::size_t> next_script(std::vector<std::size_t> choices,
                                     const std::vector<std::size_t>& options);

/// Regret of a mixture by summing over every ordered tuple of opponent
/// strategies, instead of over multiset profiles.
double tuple_regret(const EmpiricalGame& game, const std::vector<int>& clique,
                    const MixedStrategy& mixture);

}  // namespace saa::oracle
