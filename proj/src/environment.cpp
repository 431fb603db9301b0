#include "saa/environment.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "saa/errors.hpp"

namespace saa {

EnvironmentSpec EnvironmentSpec::scheduling(PreferenceModel model, int num_agents, int num_goods,
                                            std::uint64_t seed) {
  EnvironmentSpec env;
  env.num_agents = num_agents;
  env.num_goods = num_goods;
  env.preferences = model == PreferenceModel::Uniform ? PreferenceSpec{UniformModel{}}
                                                      : PreferenceSpec{ExponentialModel{}};
  env.price_cap = 55;
  env.seed = seed;
  env.validate();
  return env;
}

EnvironmentSpec EnvironmentSpec::fixed(std::vector<TableValuation> valuations, int price_cap,
                                       std::uint64_t seed) {
  if (valuations.empty()) throw ConfigError("fixed_valuations", "at least one agent required");
  EnvironmentSpec env;
  env.num_agents = static_cast<int>(valuations.size());
  env.num_goods = valuations.front().num_goods();
  env.preferences = FixedModel{std::move(valuations)};
  env.price_cap = price_cap;
  env.seed = seed;
  env.validate();
  return env;
}

void EnvironmentSpec::validate() const {
  if (num_agents < 1) throw ConfigError("num_agents", "must be >= 1");
  if (num_goods < 1 || num_goods > kMaxGoods)
    throw ConfigError("num_goods", "must be in [1, " + std::to_string(kMaxGoods) + "]");
  if (price_cap < 1) throw ConfigError("price_cap", "must be >= 1");
  if (const auto* f = std::get_if<FixedModel>(&preferences)) {
    if (static_cast<int>(f->valuations.size()) != num_agents)
      throw ConfigError("fixed_valuations", "need exactly num_agents valuations");
    for (const auto& v : f->valuations) {
      if (v.num_goods() != num_goods)
        throw ConfigError("fixed_valuations", "valuation has wrong number of goods");
      if (v.value(all_goods(num_goods)) > price_cap)
        throw ConfigError("price_cap", "must be at least the largest bundle value");
    }
  } else if (price_cap < kMaxDeadlineValue) {
    throw ConfigError("price_cap", "scheduling environments need price_cap >= 50");
  }
}

void sample_agents(const EnvironmentSpec& env, Rng& rng, std::vector<Valuation>& out) {
  out.clear();
  if (const auto* f = std::get_if<FixedModel>(&env.preferences)) {
    for (const auto& v : f->valuations) out.emplace_back(v);
    return;
  }
  const PreferenceModel model = std::holds_alternative<UniformModel>(env.preferences)
                                    ? PreferenceModel::Uniform
                                    : PreferenceModel::Exponential;
  for (int i = 0; i < env.num_agents; ++i)
    out.emplace_back(sample_valuation(model, env.num_goods, rng, env.pruning));
}

std::vector<TableValuation> exposure_example_valuations() {
  const Bundle all = make_bundle({0, 1, 2});
  return {
      TableValuation(3, {{all, 15}}),
      TableValuation(3, {{make_bundle({0}), 8}, {make_bundle({1}), 6}, {make_bundle({2}), 5}, {all, 8}}),
      TableValuation(3, {{make_bundle({0}), 10}, {make_bundle({1}), 8}, {make_bundle({2}), 6}, {all, 10}}),
  };
}

std::vector<TableValuation> no_equilibrium_valuations() {
  const Bundle both = make_bundle({0, 1});
  return {
      TableValuation(2, {{both, 30}}),
      TableValuation(2, {{make_bundle({0}), 20}, {make_bundle({1}), 20}, {both, 20}}),
  };
}

}  // namespace saa
