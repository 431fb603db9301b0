#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace saa::oracle {

namespace {

std::vector<int> sorted_goods(Bundle b) {
  std::vector<int> goods;
  for (int m = 0; m < kMaxGoods; ++m)
    if (b & (Bundle{1} << m)) goods.push_back(m);
  return goods;
}

bool preferred(double sa, Bundle a, double sb, Bundle b) {
  const double tol = 1e-9 * std::max({1.0, std::abs(sa), std::abs(sb)});
  if (std::abs(sa - sb) > tol) return sa > sb;
  const auto ga = sorted_goods(a), gb = sorted_goods(b);
  if (ga.size() != gb.size()) return ga.size() < gb.size();
  return ga < gb;
}

}  // namespace

Bundle brute_force_bundle(const Valuation& v, std::span<const double> prices, Bundle available) {
  const int m = num_goods(v);
  Bundle best = 0;
  double best_surplus = 0.0;
  for (Bundle x = 1; x < (Bundle{1} << m); ++x) {
    if ((x & ~available) != 0) continue;
    double s = value(v, x);
    for (int g : sorted_goods(x)) s -= prices[g];
    if (preferred(s, x, best_surplus, best)) {
      best = x;
      best_surplus = s;
    }
  }
  return best;
}

long max_assignment_value(const ValueMatrix& value, const std::vector<int>& copies) {
  std::vector<int> left = copies;
  const std::size_t n = value.size();
  std::function<long(std::size_t)> go = [&](std::size_t i) -> long {
    if (i == n) return 0;
    long best = go(i + 1);
    for (std::size_t j = 0; j < left.size(); ++j) {
      if (left[j] == 0) continue;
      --left[j];
      best = std::max(best, value[i][j] + go(i + 1));
      ++left[j];
    }
    return best;
  };
  return go(0);
}

long max_assignment_value(const ValueMatrix& value) {
  const std::size_t m = value.empty() ? 0 : value[0].size();
  return max_assignment_value(value, std::vector<int>(m, 1));
}

std::vector<int> min_ce_prices(const ValueMatrix& value) {
  const std::size_t m = value.empty() ? 0 : value[0].size();
  const long base = max_assignment_value(value);
  std::vector<int> prices(m);
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<int> copies(m, 1);
    copies[j] = 2;
    prices[j] = static_cast<int>(max_assignment_value(value, copies) - base);
  }
  return prices;
}

namespace {

bool is_equilibrium(const ValueMatrix& value, const std::vector<int>& p) {
  const std::size_t n = value.size(), m = p.size();
  std::vector<int> best(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) best[i] = std::max(best[i], value[i][j] - p[j]);
  std::vector<bool> sold(m, false);
  std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
    if (i == n) {
      for (std::size_t j = 0; j < m; ++j)
        if (!sold[j] && p[j] != 0) return false;
      return true;
    }
    if (best[i] == 0 && go(i + 1)) return true;
    for (std::size_t j = 0; j < m; ++j) {
      if (sold[j] || value[i][j] - p[j] != best[i]) continue;
      sold[j] = true;
      const bool ok = go(i + 1);
      sold[j] = false;
      if (ok) return true;
    }
    return false;
  };
  return go(0);
}

}  // namespace

std::vector<int> brute_force_min_ce_prices(const ValueMatrix& value, int cap) {
  const std::size_t m = value.empty() ? 0 : value[0].size();
  std::vector<int> p(m, 0), lowest(m, cap + 1);
  bool found = false;
  while (true) {
    if (is_equilibrium(value, p)) {
      found = true;
      for (std::size_t j = 0; j < m; ++j) lowest[j] = std::min(lowest[j], p[j]);
    }
    std::size_t j = 0;
    while (j < m && p[j] == cap) p[j++] = 0;
    if (j == m) break;
    ++p[j];
  }
  if (!found) return {};
  return lowest;
}

std::size_t ScriptedTieBreaker::pick(std::size_t n) {
  const std::size_t i = choices_.size();
  const std::size_t c = i < script_.size() ? script_[i] : 0;
  choices_.push_back(c);
  options_.push_back(n);
  return c;
}

std::vector<std::size_t> next_script(std::vector<std::size_t> choices,
                                     const std::vector<std::size_t>& options) {
  while (!choices.empty()) {
    const std::size_t i = choices.size() - 1;
    if (choices[i] + 1 < options[i]) {
      ++choices[i];
      return choices;
    }
    choices.pop_back();
  }
  return {};
}

double tuple_regret(const EmpiricalGame& game, const std::vector<int>& clique,
                    const MixedStrategy& mixture) {
  const int others = game.num_agents() - 1;
  const std::size_t k = clique.size();
  std::vector<double> u(k, 0.0);
  std::vector<std::size_t> tuple(others, 0);
  while (true) {
    double prob = 1.0;
    std::vector<int> counts(game.num_strategies(), 0);
    for (std::size_t t : tuple) {
      prob *= mixture[clique[t]];
      ++counts[clique[t]];
    }
    for (std::size_t a = 0; a < k; ++a) {
      Profile p{counts};
      ++p.counts[clique[a]];
      u[a] += prob * game.payoff(p, clique[a]).mean;
    }
    int pos = 0;
    while (pos < others && tuple[pos] == k - 1) tuple[pos++] = 0;
    if (pos == others) break;
    ++tuple[pos];
  }
  double mix = 0.0, best = u[0];
  for (std::size_t a = 0; a < k; ++a) {
    mix += mixture[clique[a]] * u[a];
    best = std::max(best, u[a]);
  }
  return best - mix;
}

}  // namespace saa::oracle
