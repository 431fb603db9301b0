#include "saa/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "saa/errors.hpp"

namespace saa::io {

namespace {

template <class T>
T get_field(const json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(key, "missing");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(key, e.what());
  }
}

template <class T>
T get_field_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? get_field<T>(j, key) : fallback;
}

}  // namespace

json bundle_to_json(Bundle b) {
  json out = json::array();
  for (int g : goods_of(b)) out.push_back(g + 1);
  return out;
}

Bundle bundle_from_json(const json& j, int num_goods) {
  if (!j.is_array()) throw ConfigError("bundle", "must be an array of good indices");
  Bundle b = 0;
  for (const auto& g : j) {
    if (!g.is_number_integer()) throw ConfigError("bundle", "good index must be an integer");
    const int idx = g.get<int>();
    if (idx < 1 || idx > num_goods) throw ConfigError("bundle", "good index out of range");
    b |= good_bit(idx - 1);
  }
  return b;
}

EnvironmentSpec environment_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("environment", "must be an object");
  const auto model = get_field<std::string>(j, "model");
  const auto seed = get_field_or<std::uint64_t>(j, "seed", 0);
  EnvironmentSpec env;
  if (model == "fixed") {
    const int goods = get_field<int>(j, "num_goods");
    if (goods < 1 || goods > kMaxGoods) throw ConfigError("num_goods", "out of range");
    if (!j.contains("fixed_valuations") || !j["fixed_valuations"].is_array())
      throw ConfigError("fixed_valuations", "required array for model \"fixed\"");
    std::vector<TableValuation> vals;
    for (const auto& agent : j["fixed_valuations"]) {
      std::vector<std::pair<Bundle, int>> entries;
      if (!agent.is_array()) throw ConfigError("fixed_valuations", "each agent is a list of entries");
      for (const auto& e : agent) {
        if (e.is_object()) {
          entries.emplace_back(bundle_from_json(e.at("bundle"), goods), get_field<int>(e, "value"));
        } else if (e.is_array() && e.size() == 2 && e[1].is_number_integer()) {
          entries.emplace_back(bundle_from_json(e[0], goods), e[1].get<int>());
        } else {
          throw ConfigError("fixed_valuations", "entry must be {bundle, value} or [bundle, value]");
        }
      }
      try {
        vals.emplace_back(goods, entries);
      } catch (const std::invalid_argument& ex) {
        throw ConfigError("fixed_valuations", ex.what());
      }
    }
    int cap = 0;
    for (const auto& v : vals) cap = std::max(cap, v.value(all_goods(goods)));
    env.num_goods = goods;
    env.num_agents = get_field_or<int>(j, "num_agents", static_cast<int>(vals.size()));
    env.price_cap = get_field_or<int>(j, "price_cap", std::max(cap, 1));
    env.preferences = FixedModel{std::move(vals)};
  } else if (model == "uniform" || model == "exponential") {
    env.num_goods = get_field<int>(j, "num_goods");
    env.num_agents = get_field<int>(j, "num_agents");
    env.price_cap = get_field_or<int>(j, "price_cap", 55);
    env.preferences = model == "uniform" ? PreferenceSpec{UniformModel{}} : PreferenceSpec{ExponentialModel{}};
  } else {
    throw ConfigError("model", "must be \"uniform\", \"exponential\" or \"fixed\"");
  }
  const auto pruning = get_field_or<std::string>(j, "pruning", "zero");
  if (pruning == "clamp") env.pruning = PruningPolicy::SequentialClamp;
  else if (pruning == "zero") env.pruning = PruningPolicy::ZeroViolators;
  else if (pruning == "sort") env.pruning = PruningPolicy::SortDescending;
  else throw ConfigError("pruning", "must be \"zero\", \"clamp\" or \"sort\"");
  env.seed = seed;
  env.validate();
  return env;
}

json environment_to_json(const EnvironmentSpec& env) {
  json j;
  j["num_agents"] = env.num_agents;
  j["num_goods"] = env.num_goods;
  j["price_cap"] = env.price_cap;
  j["seed"] = env.seed;
  j["pruning"] = env.pruning == PruningPolicy::SequentialClamp ? "clamp"
                 : env.pruning == PruningPolicy::ZeroViolators ? "zero"
                                                                : "sort";
  if (std::holds_alternative<UniformModel>(env.preferences)) {
    j["model"] = "uniform";
  } else if (std::holds_alternative<ExponentialModel>(env.preferences)) {
    j["model"] = "exponential";
  } else {
    j["model"] = "fixed";
    json agents = json::array();
    for (const auto& v : std::get<FixedModel>(env.preferences).valuations) {
      json entries = json::array();
      for (const auto& [b, val] : v.entries()) entries.push_back({{"bundle", bundle_to_json(b)}, {"value", val}});
      agents.push_back(entries);
    }
    j["fixed_valuations"] = agents;
  }
  return j;
}

json distribution_to_json(const MarginalPriceDistribution& dist) { return dist.masses(); }

MarginalPriceDistribution distribution_from_json(const json& j) {
  try {
    return MarginalPriceDistribution(j.get<std::vector<std::vector<double>>>());
  } catch (const json::exception& e) {
    throw ConfigError("distribution", e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError("distribution", e.what());
  }
}

std::string distribution_to_csv(const MarginalPriceDistribution& dist) {
  std::ostringstream os;
  os << "good,price,mass\n" << std::setprecision(17);
  for (int m = 0; m < dist.num_goods(); ++m) {
    const auto p = dist.pmf(m);
    for (int q = 0; q <= dist.price_cap(); ++q) os << m + 1 << ',' << q << ',' << p[q] << '\n';
  }
  return os.str();
}

MarginalPriceDistribution distribution_from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line.rfind("good,price,mass", 0) != 0)
    throw ConfigError("distribution", "CSV must start with header good,price,mass");
  std::vector<std::vector<double>> rows;
  int cap = -1;
  struct Row { int good, price; double mass; };
  std::vector<Row> parsed;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    Row r{};
    char c1 = 0, c2 = 0;
    if (!(ls >> r.good >> c1 >> r.price >> c2 >> r.mass) || c1 != ',' || c2 != ',')
      throw ConfigError("distribution", "malformed CSV row: " + line);
    if (r.good < 1 || r.price < 0) throw ConfigError("distribution", "bad good or price: " + line);
    cap = std::max(cap, r.price);
    parsed.push_back(r);
  }
  for (const auto& r : parsed) {
    if (static_cast<int>(rows.size()) < r.good) rows.resize(r.good, std::vector<double>(cap + 1, 0.0));
    rows[r.good - 1][r.price] = r.mass;
  }
  for (auto& row : rows) row.resize(cap + 1, 0.0);
  try {
    return MarginalPriceDistribution(std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw ConfigError("distribution", e.what());
  }
}

json point_prediction_to_json(const PointPrediction& p) { return p.prices; }

PointPrediction point_prediction_from_json(const json& j) {
  try {
    return PointPrediction{j.get<std::vector<int>>()};
  } catch (const json::exception& e) {
    throw ConfigError("prediction", e.what());
  }
}

json strategy_to_json(const StrategySpec& spec) {
  if (std::holds_alternative<StraightforwardBidding>(spec)) return {{"kind", "sb"}};
  if (const auto* p = std::get_if<PointPredictor>(&spec))
    return {{"kind", "point"}, {"prediction", point_prediction_to_json(p->prediction)}};
  const auto& d = std::get<DistributionPredictor>(spec);
  return {{"kind", "distribution"}, {"distribution", distribution_to_json(*d.distribution)}};
}

StrategySpec strategy_from_json(const json& j) {
  const auto kind = get_field<std::string>(j, "kind");
  if (kind == "sb") return StraightforwardBidding{};
  if (kind == "point") return PointPredictor{point_prediction_from_json(j.at("prediction"))};
  if (kind == "distribution") {
    if (!j.contains("distribution")) throw ConfigError("distribution", "missing");
    return make_distribution_predictor(distribution_from_json(j["distribution"]));
  }
  throw ConfigError("kind", "must be \"sb\", \"point\" or \"distribution\"");
}

json roster_to_json(const StrategyRoster& roster) {
  json out = json::array();
  for (const auto& e : roster.entries()) {
    json s = strategy_to_json(e.spec);
    s["label"] = e.label;
    out.push_back(s);
  }
  return out;
}

StrategyRoster roster_from_json(const json& j) {
  if (!j.is_array()) throw ConfigError("roster", "must be an array");
  std::vector<RosterEntry> entries;
  for (const auto& e : j) entries.push_back({get_field<std::string>(e, "label"), strategy_from_json(e)});
  return StrategyRoster(std::move(entries));
}

json sc_params_to_json(const SCSolverParams& p) {
  return {{"samples_per_iteration", p.samples_per_iteration},
          {"ks_threshold", p.ks_threshold},
          {"max_iterations", p.max_iterations},
          {"smoothing_window", p.smoothing_window}};
}

SCSolverParams sc_params_from_json(const json& j, SCSolverParams p) {
  p.samples_per_iteration = get_field_or<std::int64_t>(j, "samples_per_iteration", p.samples_per_iteration);
  p.ks_threshold = get_field_or<double>(j, "ks_threshold", p.ks_threshold);
  p.max_iterations = get_field_or<int>(j, "max_iterations", p.max_iterations);
  p.smoothing_window = get_field_or<int>(j, "smoothing_window", p.smoothing_window);
  p.validate();
  return p;
}

json sc_result_to_json(const SCResult& r, const SCSolverParams& params) {
  json stats = json::array();
  for (std::size_t m = 0; m < r.stats.size(); ++m)
    stats.push_back({{"good", m + 1}, {"mean", r.stats[m].mean}, {"stddev", r.stats[m].stddev}});
  return {{"schema_version", kSchemaVersion},
          {"params", sc_params_to_json(params)},
          {"converged", r.converged},
          {"iterations", r.iterations_used},
          {"ks_trace", r.ks_trace},
          {"stats", stats},
          {"distribution", distribution_to_json(r.distribution)}};
}

json payoff_table_to_json(const EmpiricalGame& game, const StrategyRoster& roster,
                          const EnvironmentSpec& env) {
  json profiles = json::array();
  for (const auto& [p, entry] : game.table()) {
    json payoffs = json::array();
    for (std::size_t s = 0; s < entry.payoffs.size(); ++s) {
      const auto& sp = entry.payoffs[s];
      if (sp.observations == 0) continue;
      payoffs.push_back({{"strategy", game.labels()[s]},
                         {"mean", sp.mean},
                         {"variance", sp.variance},
                         {"games", sp.games},
                         {"observations", sp.observations}});
    }
    profiles.push_back({{"counts", p.counts}, {"payoffs", payoffs}});
  }
  return {{"schema_version", kSchemaVersion},
          {"num_agents", game.num_agents()},
          {"environment", environment_to_json(env)},
          {"roster", roster_to_json(roster)},
          {"profiles", profiles}};
}

PayoffTable payoff_table_from_json(const json& j) {
  PayoffTable t;
  t.roster = roster_from_json(j.at("roster"));
  t.environment = j.value("environment", json::object());
  const auto labels = t.roster.labels();
  t.game = EmpiricalGame(get_field<int>(j, "num_agents"), labels);
  for (const auto& pj : j.at("profiles")) {
    Profile p{pj.at("counts").get<std::vector<int>>()};
    PayoffEntry e;
    e.payoffs.resize(labels.size());
    for (const auto& sj : pj.at("payoffs")) {
      const int s = t.roster.index_of(get_field<std::string>(sj, "strategy"));
      e.payoffs[s] = {get_field<double>(sj, "mean"), get_field<double>(sj, "variance"),
                      get_field<std::int64_t>(sj, "games"), get_field<std::int64_t>(sj, "observations")};
    }
    try {
      t.game.insert(p, std::move(e));
    } catch (const std::invalid_argument& ex) {
      throw ConfigError("profiles", ex.what());
    }
  }
  return t;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path, "cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json read_json_file(const std::string& path) {
  try {
    return json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw ConfigError(path, e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace saa::io
