#pragma once

#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "saa/bundle.hpp"
#include "saa/rng.hpp"

namespace saa {

/// Market-based scheduling preferences: a job needing `job_length` slots,
/// worth v_t when it completes at slot t. Slots are goods 0..M-1; the job
/// completes at the job_length-th earliest slot the agent holds.
class SchedulingValuation {
 public:
  /// `deadline_values` holds v_t for t = job_length..M (1-based), and must be
  /// non-increasing with entries in [0, 50].
  SchedulingValuation(int num_goods, int job_length, std::vector<int> deadline_values);

  int num_goods() const { return num_goods_; }
  int job_length() const { return job_length_; }
  std::span<const int> deadline_values() const { return deadline_values_; }
  /// Value of completing at 0-based slot t (0 if t < job_length - 1).
  int completion_value(int slot) const;
  int value(Bundle goods) const;

 private:
  int num_goods_;
  int job_length_;
  std::vector<int> deadline_values_;
};

/// Explicit bundle values with free disposal: a bundle is worth the most any
/// listed sub-bundle is worth.
class TableValuation {
 public:
  TableValuation(int num_goods, const std::vector<std::pair<Bundle, int>>& entries);

  int num_goods() const { return num_goods_; }
  int value(Bundle goods) const { return closure_[goods]; }
  const std::vector<std::pair<Bundle, int>>& entries() const { return entries_; }
  bool single_unit() const { return single_unit_; }

 private:
  int num_goods_;
  std::vector<std::pair<Bundle, int>> entries_;
  std::vector<int> closure_;  // indexed by bundle mask
  bool single_unit_;
};

using Valuation = std::variant<SchedulingValuation, TableValuation>;

int num_goods(const Valuation& v);
int value(const Valuation& v, Bundle goods);
double surplus(const Valuation& v, Bundle goods, std::span<const double> prices);
long surplus(const Valuation& v, Bundle goods, std::span<const int> prices);
bool is_single_unit(const Valuation& v);

/// The surplus-maximizing bundle at `prices`, restricted to `available`.
/// Surpluses within a relative 1e-9 count as tied; ties go to the smaller
/// bundle, then to the lexicographically smallest, so the empty bundle wins
/// at zero surplus. Scheduling valuations use the completion-slot search;
/// table valuations enumerate sub-bundles of `available`.
Bundle optimal_bundle(const Valuation& v, std::span<const double> prices, Bundle available);

/// Tie-aware comparison used by optimal_bundle.
bool better_bundle(double surplus_a, Bundle a, double surplus_b, Bundle b);

enum class PreferenceModel { Uniform, Exponential };

/// How raw deadline draws are made non-increasing.
enum class PruningPolicy {
  SequentialClamp,  // v_t <- min(v_t, v_{t-1})
  ZeroViolators,    // v_t <- 0 if it exceeds v_{t-1}
  SortDescending,   // reorder the draws from largest to smallest
};

inline constexpr int kMaxDeadlineValue = 50;

/// Job length for the given model: uniform on 1..M, or Pr(l) = 2^-l for
/// l < M with the last bucket taking 2^-(M-1).
int sample_job_length(PreferenceModel model, int num_goods, Rng& rng);
std::vector<int> prune_deadline_values(std::vector<int> raw, PruningPolicy policy);
SchedulingValuation sample_valuation(PreferenceModel model, int num_goods, Rng& rng,
                                     PruningPolicy policy = PruningPolicy::ZeroViolators);

}  // namespace saa
