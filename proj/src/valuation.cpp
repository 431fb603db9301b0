#include "saa/valuation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace saa {

SchedulingValuation::SchedulingValuation(int num_goods, int job_length,
                                         std::vector<int> deadline_values)
    : num_goods_(num_goods), job_length_(job_length), deadline_values_(std::move(deadline_values)) {
  if (num_goods < 1 || num_goods > kMaxGoods)
    throw std::invalid_argument("scheduling valuation: bad num_goods");
  if (job_length < 1 || job_length > num_goods)
    throw std::invalid_argument("scheduling valuation: job_length must be in [1, M]");
  if (static_cast<int>(deadline_values_.size()) != num_goods - job_length + 1)
    throw std::invalid_argument("scheduling valuation: need M - job_length + 1 deadline values");
  for (std::size_t i = 0; i < deadline_values_.size(); ++i) {
    if (deadline_values_[i] < 0 || deadline_values_[i] > kMaxDeadlineValue)
      throw std::invalid_argument("scheduling valuation: deadline value out of [0, 50]");
    if (i > 0 && deadline_values_[i] > deadline_values_[i - 1])
      throw std::invalid_argument("scheduling valuation: deadline values must be non-increasing");
  }
}

int SchedulingValuation::completion_value(int slot) const {
  const int idx = slot - (job_length_ - 1);
  return idx < 0 ? 0 : deadline_values_[idx];
}

int SchedulingValuation::value(Bundle goods) const {
  int needed = job_length_;
  for (int m = 0; goods != 0; ++m, goods >>= 1) {
    if ((goods & 1u) && --needed == 0) return completion_value(m);
  }
  return 0;
}

TableValuation::TableValuation(int num_goods, const std::vector<std::pair<Bundle, int>>& entries)
    : num_goods_(num_goods), entries_(entries) {
  if (num_goods < 1 || num_goods > kMaxGoods)
    throw std::invalid_argument("table valuation: bad num_goods");
  const Bundle full = all_goods(num_goods);
  closure_.assign(std::size_t{full} + 1, 0);
  for (const auto& [bundle, val] : entries_) {
    if (!is_subset(bundle, full))
      throw std::invalid_argument("table valuation: bundle references unknown good");
    if (val < 0) throw std::invalid_argument("table valuation: values must be non-negative");
    closure_[bundle] = std::max(closure_[bundle], val);
  }
  // Free disposal: propagate each bundle's value to its supersets.
  for (int m = 0; m < num_goods; ++m)
    for (Bundle x = 0; x <= full; ++x)
      if (contains(x, m)) closure_[x] = std::max(closure_[x], closure_[x ^ good_bit(m)]);

  single_unit_ = true;
  for (Bundle x = 1; x <= full && single_unit_; ++x) {
    int best_single = 0;
    for (int m = 0; m < num_goods; ++m)
      if (contains(x, m)) best_single = std::max(best_single, closure_[good_bit(m)]);
    single_unit_ = closure_[x] == best_single;
  }
}

int num_goods(const Valuation& v) {
  return std::visit([](const auto& x) { return x.num_goods(); }, v);
}

int value(const Valuation& v, Bundle goods) {
  return std::visit([goods](const auto& x) { return x.value(goods); }, v);
}

double surplus(const Valuation& v, Bundle goods, std::span<const double> prices) {
  double s = value(v, goods);
  for (int m = 0; goods != 0; ++m, goods >>= 1)
    if (goods & 1u) s -= prices[m];
  return s;
}

long surplus(const Valuation& v, Bundle goods, std::span<const int> prices) {
  long s = value(v, goods);
  for (int m = 0; goods != 0; ++m, goods >>= 1)
    if (goods & 1u) s -= prices[m];
  return s;
}

bool is_single_unit(const Valuation& v) {
  if (const auto* s = std::get_if<SchedulingValuation>(&v)) return s->job_length() == 1;
  return std::get<TableValuation>(v).single_unit();
}

bool better_bundle(double surplus_a, Bundle a, double surplus_b, Bundle b) {
  const double scale = std::max({1.0, std::abs(surplus_a), std::abs(surplus_b)});
  const double tol = 1e-9 * scale;
  if (surplus_a > surplus_b + tol) return true;
  if (surplus_b > surplus_a + tol) return false;
  const int ca = cardinality(a), cb = cardinality(b);
  if (ca != cb) return ca < cb;
  return lex_less(a, b);
}

namespace {

Bundle optimal_scheduling(const SchedulingValuation& v, std::span<const double> prices,
                          Bundle available) {
  const int num_goods = v.num_goods();
  const int extra = v.job_length() - 1;
  Bundle best = kEmptyBundle;
  double best_surplus = 0.0;

  std::array<int, kMaxGoods> earlier{};
  for (int slot = extra; slot < num_goods; ++slot) {
    if (!contains(available, slot)) continue;
    // Cheapest job_length - 1 available slots before `slot`, ties to lower index.
    int n = 0;
    for (int j = 0; j < slot; ++j)
      if (contains(available, j)) earlier[n++] = j;
    if (n < extra) continue;
    std::partial_sort(earlier.begin(), earlier.begin() + extra, earlier.begin() + n,
                      [&](int a, int b) { return prices[a] < prices[b] || (prices[a] == prices[b] && a < b); });
    Bundle candidate = good_bit(slot);
    double cost = prices[slot];
    for (int i = 0; i < extra; ++i) {
      candidate |= good_bit(earlier[i]);
      cost += prices[earlier[i]];
    }
    const double s = v.completion_value(slot) - cost;
    if (better_bundle(s, candidate, best_surplus, best)) {
      best = candidate;
      best_surplus = s;
    }
  }
  return best;
}

Bundle optimal_table(const TableValuation& v, std::span<const double> prices, Bundle available) {
  Bundle best = kEmptyBundle;
  double best_surplus = 0.0;
  // Enumerate non-empty sub-bundles of `available`.
  for (Bundle x = available; x != 0; x = (x - 1) & available) {
    double s = v.value(x);
    for (int m = 0, bits = static_cast<int>(x); bits != 0; ++m, bits >>= 1)
      if (bits & 1) s -= prices[m];
    if (better_bundle(s, x, best_surplus, best)) {
      best = x;
      best_surplus = s;
    }
  }
  return best;
}

}  // namespace

Bundle optimal_bundle(const Valuation& v, std::span<const double> prices, Bundle available) {
  available &= all_goods(num_goods(v));
  if (const auto* s = std::get_if<SchedulingValuation>(&v))
    return optimal_scheduling(*s, prices, available);
  return optimal_table(std::get<TableValuation>(v), prices, available);
}

int sample_job_length(PreferenceModel model, int num_goods, Rng& rng) {
  if (num_goods < 1) throw std::invalid_argument("sample_job_length: M must be >= 1");
  if (model == PreferenceModel::Uniform) return rng.uniform_int(1, num_goods);
  // Geometric with the tail mass folded into the last bucket: each length
  // below M is taken with probability 1/2 given it was reached.
  int length = 1;
  while (length < num_goods && (rng() >> 63) == 0) ++length;
  return length;
}

std::vector<int> prune_deadline_values(std::vector<int> raw, PruningPolicy policy) {
  if (policy == PruningPolicy::SortDescending) {
    std::sort(raw.begin(), raw.end(), std::greater<>());
    return raw;
  }
  for (std::size_t t = 1; t < raw.size(); ++t) {
    if (raw[t] <= raw[t - 1]) continue;
    raw[t] = policy == PruningPolicy::SequentialClamp ? raw[t - 1] : 0;
  }
  return raw;
}

SchedulingValuation sample_valuation(PreferenceModel model, int num_goods, Rng& rng,
                                     PruningPolicy policy) {
  const int length = sample_job_length(model, num_goods, rng);
  std::vector<int> raw(num_goods - length + 1);
  for (int& x : raw) x = rng.uniform_int(1, kMaxDeadlineValue);
  return SchedulingValuation(num_goods, length, prune_deadline_values(std::move(raw), policy));
}

}  // namespace saa
