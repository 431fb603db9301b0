#include "commands.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <set>
#include <utility>
#include <vector>

#include <fmt/core.h>

#include "saa/analysis.hpp"
#include "saa/batch.hpp"
#include "saa/errors.hpp"
#include "saa/io.hpp"
#include "saa/roster.hpp"
#include "saa/sc_solver.hpp"

namespace saa::cli {

namespace fs = std::filesystem;
using io::json;

namespace {

constexpr const char* kArtifactVersion = "0.1.0";

struct Context {
  json config = json::object();
  fs::path base_dir = ".";
  std::uint64_t seed = 0;
  int workers = 1;
  fs::path out;
  json echo = json::object();
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();
  std::string started_utc;
};

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(key, "missing");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(key, e.what());
  }
}

template <class T>
T field_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? field<T>(j, key) : fallback;
}

Context load_context(const CommonOptions& opt, bool needs_out) {
  Context ctx;
  ctx.started_utc = utc_now();
  if (opt.config_path.empty()) throw ConfigError("--config", "required");
  ctx.config = io::read_json_file(opt.config_path);
  if (!ctx.config.is_object()) throw ConfigError("config", "must be a JSON object");
  ctx.base_dir = fs::path(opt.config_path).parent_path();
  if (ctx.base_dir.empty()) ctx.base_dir = ".";

  const int version = field<int>(ctx.config, "schema_version");
  if (version != io::kSchemaVersion)
    throw ConfigError("schema_version", fmt::format("unsupported version {} (expected {})", version,
                                                    io::kSchemaVersion));
  if (opt.seed) ctx.seed = *opt.seed;
  else if (ctx.config.contains("seed")) ctx.seed = field<std::uint64_t>(ctx.config, "seed");
  else throw ConfigError("seed", "required (pass --seed or set \"seed\"); there is no default");

  ctx.workers = opt.workers ? *opt.workers : field_or<int>(ctx.config, "workers", 1);
  if (ctx.workers < 1) throw ConfigError("workers", "must be >= 1");

  if (opt.out) ctx.out = *opt.out;
  else if (ctx.config.contains("out")) ctx.out = ctx.base_dir / field<std::string>(ctx.config, "out");
  if (needs_out && ctx.out.empty()) throw ConfigError("out", "required (pass --out or set \"out\")");

  ctx.echo["schema_version"] = version;
  ctx.echo["seed"] = ctx.seed;
  ctx.echo["workers"] = ctx.workers;
  return ctx;
}

fs::path resolve(const Context& ctx, const std::string& p) {
  const fs::path path(p);
  return path.is_absolute() ? path : ctx.base_dir / path;
}

EnvironmentSpec load_environment(Context& ctx) {
  json j;
  if (ctx.config.contains("environment")) {
    j = ctx.config["environment"];
  } else if (ctx.config.contains("environment_file")) {
    j = io::read_json_file(resolve(ctx, field<std::string>(ctx.config, "environment_file")).string());
  } else {
    throw ConfigError("environment", "missing (inline object or \"environment_file\")");
  }
  EnvironmentSpec env = io::environment_from_json(j);
  env.seed = ctx.seed;
  env.validate();
  ctx.echo["environment"] = io::environment_to_json(env);
  return env;
}

MarginalPriceDistribution load_distribution(const fs::path& path) {
  const std::string text = io::read_text_file(path.string());
  if (path.extension() == ".csv") {
    try {
      return io::distribution_from_csv(text);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw ConfigError(path.string(), e.what());
    }
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string(), e.what());
  }
  if (j.is_object() && j.contains("distribution")) j = j["distribution"];
  try {
    return io::distribution_from_json(j);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(path.string(), e.what());
  }
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", digest[i]);
  return hex;
}

/// Collects data files, then writes them together with the manifest.
class Outputs {
 public:
  void add(std::string name, std::string content) { files_.emplace_back(std::move(name), std::move(content)); }

  void write(const Context& ctx, const std::string& command) const {
    fs::create_directories(ctx.out);
    json listed = json::array();
    for (const auto& [name, content] : files_) {
      io::write_text_file((ctx.out / name).string(), content);
      listed.push_back({{"file", name}, {"bytes", content.size()}, {"sha256", sha256_hex(content)}});
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - ctx.started).count();
    const json manifest = {{"schema_version", io::kSchemaVersion},
                           {"artifact", "saa"},
                           {"artifact_version", kArtifactVersion},
                           {"command", command},
                           {"config", ctx.echo},
                           {"outputs", listed},
                           {"timing", {{"started_utc", ctx.started_utc}, {"elapsed_seconds", elapsed}}}};
    io::write_text_file((ctx.out / "manifest.json").string(), io::dump(manifest));
    std::cerr << fmt::format("wrote {} file(s) and manifest.json to {}\n", files_.size(),
                             ctx.out.string());
  }

 private:
  std::vector<std::pair<std::string, std::string>> files_;
};

std::string stats_table(const std::vector<GoodStats>& stats) {
  std::string s = "good    mean     std\n";
  for (std::size_t m = 0; m < stats.size(); ++m)
    s += fmt::format("{:>4} {:>7.2f} {:>7.2f}\n", m + 1, stats[m].mean, stats[m].stddev);
  return s;
}

json stats_json(const std::vector<GoodStats>& stats) {
  json out = json::array();
  for (std::size_t m = 0; m < stats.size(); ++m)
    out.push_back({{"good", m + 1}, {"mean", stats[m].mean}, {"stddev", stats[m].stddev}});
  return out;
}

std::string env_label(const json& env) {
  const std::string model = env.value("model", "");
  const char letter = model == "uniform" ? 'U' : model == "exponential" ? 'E' : 'F';
  return fmt::format("{}({}, {})", letter, env.value("num_goods", 0), env.value("num_agents", 0));
}

// ---- simulate-profile helpers ----

StrategyRoster load_roster(Context& ctx) {
  const json& c = ctx.config;
  StrategyRoster roster;
  if (c.contains("roster")) {
    roster = io::roster_from_json(c["roster"]);
  } else if (c.contains("roster_file")) {
    roster = io::roster_from_json(io::read_json_file(resolve(ctx, field<std::string>(c, "roster_file")).string()));
  } else if (c.contains("default_roster")) {
    const json& d = c["default_roster"];
    const auto sb = load_distribution(resolve(ctx, field<std::string>(d, "sb_distribution")));
    const auto sc = load_distribution(resolve(ctx, field<std::string>(d, "sc_distribution")));
    roster = default_roster(sb, sc);
  } else {
    throw ConfigError("roster", "missing (\"roster\", \"roster_file\" or \"default_roster\")");
  }
  return roster;
}

std::vector<int> labels_to_indices(const StrategyRoster& roster, const json& labels, const char* key) {
  if (!labels.is_array() || labels.empty()) throw ConfigError(key, "must be a non-empty array of labels");
  std::vector<int> out;
  for (const auto& l : labels) {
    if (!l.is_string()) throw ConfigError(key, "labels must be strings");
    out.push_back(roster.index_of(l.get<std::string>()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::set<Profile> select_profiles(const Context& ctx, const StrategyRoster& roster, int num_agents) {
  const json& c = ctx.config;
  const std::size_t s = roster.size();
  std::set<Profile> out;
  if (c.contains("profiles")) {
    if (!c["profiles"].is_array()) throw ConfigError("profiles", "must be an array");
    for (const auto& pj : c["profiles"]) {
      Profile p{std::vector<int>(s, 0)};
      if (pj.is_object()) {
        for (const auto& [label, count] : pj.items()) {
          if (!count.is_number_integer() || count.get<int>() < 0)
            throw ConfigError("profiles", "count for " + label + " must be a non-negative integer");
          p.counts[roster.index_of(label)] += count.get<int>();
        }
      } else if (pj.is_array() && pj.size() == s) {
        p.counts = pj.get<std::vector<int>>();
      } else {
        throw ConfigError("profiles", "each profile is {label: count} or a count per roster entry");
      }
      if (p.num_agents() != num_agents)
        throw ConfigError("profiles", fmt::format("profile counts sum to {}, need {}", p.num_agents(), num_agents));
      out.insert(p);
    }
  }
  if (c.contains("deviations_from")) {
    json labels = c["deviations_from"];
    if (labels.is_string()) labels = json::array({labels});
    for (int base : labels_to_indices(roster, labels, "deviations_from")) {
      const Profile all = symmetric_profile(s, num_agents, base);
      out.insert(all);
      for (std::size_t d = 0; d < s; ++d)
        if (static_cast<int>(d) != base) out.insert(deviation_profile(all, base, static_cast<int>(d)));
    }
  }
  if (c.contains("cliques")) {
    if (!c["cliques"].is_array()) throw ConfigError("cliques", "must be an array of label arrays");
    for (const auto& cj : c["cliques"]) {
      const auto clique = labels_to_indices(roster, cj, "cliques");
      for (const auto& sub : enumerate_profiles(num_agents, static_cast<int>(clique.size()))) {
        Profile p{std::vector<int>(s, 0)};
        for (std::size_t k = 0; k < clique.size(); ++k) p.counts[clique[k]] = sub.counts[k];
        out.insert(p);
      }
    }
  }
  if (out.empty()) throw ConfigError("profiles", "no profiles selected");
  return out;
}

bool all_single_unit(const EnvironmentSpec& env) {
  const auto* fixed = std::get_if<FixedModel>(&env.preferences);
  if (!fixed) return false;
  for (const auto& v : fixed->valuations)
    if (!v.single_unit()) return false;
  return true;
}

}  // namespace

int cmd_derive_sc(const CommonOptions& opt) {
  Context ctx = load_context(opt, true);
  const EnvironmentSpec env = load_environment(ctx);
  const SCSolverParams params = io::sc_params_from_json(ctx.config.value("sc", json::object()));
  const std::string mode = field_or<std::string>(ctx.config, "mode", "self-confirming");
  ctx.echo["sc"] = io::sc_params_to_json(params);
  ctx.echo["mode"] = mode;

  Outputs outputs;
  std::vector<GoodStats> stats;
  if (mode == "self-confirming") {
    const SCResult r = derive_sc(env, params, ctx.workers, [](int t, double ks) {
      std::cerr << fmt::format("iteration {:>3}: KS_marg = {:.6f}\n", t + 1, ks);
    });
    if (!r.converged)
      std::cerr << fmt::format("not converged after {} iterations; returning the mean of the last {}\n",
                               r.iterations_used, params.smoothing_window);
    outputs.add("sc_distribution.csv", io::distribution_to_csv(r.distribution));
    outputs.add("sc_result.json", io::dump(io::sc_result_to_json(r, params)));
    stats = r.stats;
    std::cout << fmt::format("{} {}: converged={} iterations={}\n", env_label(ctx.echo["environment"]),
                             mode, r.converged, r.iterations_used);
  } else if (mode == "straightforward") {
    const auto dist = empirical_marginals(env, StraightforwardBidding{}, params.samples_per_iteration,
                                          derive_seed({env.seed, 0x5B}), ctx.workers);
    stats = describe(dist);
    outputs.add("sb_distribution.csv", io::distribution_to_csv(dist));
    outputs.add("sb_result.json",
                io::dump({{"schema_version", io::kSchemaVersion},
                          {"samples", params.samples_per_iteration},
                          {"stats", stats_json(stats)},
                          {"distribution", io::distribution_to_json(dist)}}));
    std::cout << fmt::format("{} {}: {} games\n", env_label(ctx.echo["environment"]), mode,
                             params.samples_per_iteration);
  } else {
    throw ConfigError("mode", "must be \"self-confirming\" or \"straightforward\"");
  }
  std::cout << stats_table(stats);
  outputs.write(ctx, "derive-sc");
  return kExitOk;
}

int cmd_simulate_profile(const CommonOptions& opt) {
  Context ctx = load_context(opt, true);
  const EnvironmentSpec env = load_environment(ctx);
  const StrategyRoster roster = load_roster(ctx);
  try {
    roster.validate(env.num_goods, env.price_cap);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("roster", e.what());
  }
  const auto games = field<std::int64_t>(ctx.config, "games");
  if (games < 1) throw ConfigError("games", "must be >= 1");
  const bool efficiency = field_or<bool>(ctx.config, "efficiency", false);
  const auto profiles = select_profiles(ctx, roster, env.num_agents);
  ctx.echo["roster"] = roster.labels();
  ctx.echo["games"] = games;
  ctx.echo["efficiency"] = efficiency;

  EmpiricalGame game(env.num_agents, roster.labels());
  json eff = json::array();
  const int kappa = std::min(env.num_goods, env.num_agents);
  const bool single_unit = all_single_unit(env);
  std::size_t done = 0;
  for (const Profile& p : profiles) {
    std::cerr << fmt::format("profile {}/{} {}\n", ++done, profiles.size(), game.format(p));
    const std::uint64_t stream = profile_stream(env.seed, p);
    const ProfileTally t =
        ctx.workers == 1
            ? profile_batch_serial(env, roster.specs(), p.counts, stream, games, efficiency)
            : profile_batch_parallel(env, roster.specs(), p.counts, stream, games, ctx.workers, efficiency);
    if (t.non_quiesced > 0)
      throw SimulationError(fmt::format("{} of {} auctions in {} hit the round limit", t.non_quiesced,
                                        games, game.format(p)));
    game.insert(p, payoff_entry_from_tally(t.sum, t.sum_sq, t.observations, games));
    if (efficiency) {
      json e = {{"counts", p.counts},
                {"mean_allocation_value", static_cast<double>(t.welfare) / games},
                {"mean_optimal_value", static_cast<double>(t.optimal_welfare) / games},
                {"max_shortfall", t.max_welfare_gap}};
      if (single_unit) {
        e["kappa"] = kappa;
        e["shortfall_bound"] = kappa * (1 + kappa);
        e["within_bound"] = t.max_welfare_gap <= kappa * (1 + kappa);
      }
      eff.push_back(e);
    }
  }

  for (const auto& [p, entry] : game.table()) {
    std::cout << game.format(p) << "\n";
    for (std::size_t s = 0; s < entry.payoffs.size(); ++s) {
      const auto& sp = entry.payoffs[s];
      if (sp.observations == 0) continue;
      std::cout << fmt::format("  {:<14} mean {:>9.4f}  sd {:>8.4f}  n {}\n", roster[s].label, sp.mean,
                               std::sqrt(sp.variance), sp.observations);
    }
  }
  Outputs outputs;
  outputs.add("payoff_table.json", io::dump(io::payoff_table_to_json(game, roster, env)));
  if (efficiency) {
    for (const auto& e : eff)
      std::cout << fmt::format("efficiency {}: mean value {:.3f} of optimal {:.3f}, worst shortfall {}{}\n",
                               e["counts"].dump(), e["mean_allocation_value"].get<double>(),
                               e["mean_optimal_value"].get<double>(), e["max_shortfall"].get<long>(),
                               e.contains("within_bound")
                                   ? fmt::format(" (bound {}: {})", e["shortfall_bound"].get<int>(),
                                                 e["within_bound"].get<bool>() ? "ok" : "exceeded")
                                   : "");
    outputs.add("efficiency.json", io::dump({{"schema_version", io::kSchemaVersion}, {"profiles", eff}}));
  }
  outputs.write(ctx, "simulate-profile");
  return kExitOk;
}

int cmd_analyze_game(const CommonOptions& opt) {
  Context ctx = load_context(opt, true);
  const json& c = ctx.config;
  if (!c.contains("payoff_tables") || !c["payoff_tables"].is_array() || c["payoff_tables"].empty())
    throw ConfigError("payoff_tables", "must be a non-empty array of payoff table files");

  std::optional<io::PayoffTable> merged;
  json files = json::array();
  for (const auto& f : c["payoff_tables"]) {
    const fs::path path = resolve(ctx, f.get<std::string>());
    auto t = io::payoff_table_from_json(io::read_json_file(path.string()));
    files.push_back(f);
    if (!merged) {
      merged = std::move(t);
      continue;
    }
    if (t.game.num_agents() != merged->game.num_agents() || t.roster.labels() != merged->roster.labels())
      throw ConfigError("payoff_tables", path.string() + " has a different roster or agent count");
    merged->game.merge(t.game);
  }
  const EmpiricalGame& game = merged->game;
  const StrategyRoster& roster = merged->roster;

  const std::string candidate_label = field_or<std::string>(c, "candidate", kScLabel);
  const int candidate = roster.index_of(candidate_label);
  const int resamples = field_or<int>(c, "bootstrap_resamples", 10000);
  if (resamples < 1) throw ConfigError("bootstrap_resamples", "must be >= 1");
  const bool run_dominance = field_or<bool>(c, "dominance", true);
  const bool run_replicator = field_or<bool>(c, "replicator", true);
  ReplicatorOptions ropt;
  ropt.max_steps = field_or<int>(c, "replicator_max_steps", ropt.max_steps);
  ropt.tol = field_or<double>(c, "replicator_tol", ropt.tol);
  ctx.echo["payoff_tables"] = files;
  ctx.echo["candidate"] = candidate_label;
  ctx.echo["bootstrap_resamples"] = resamples;

  const Profile all_c = symmetric_profile(roster.size(), game.num_agents(), candidate);
  const double epsilon = verify_pure_symmetric_nash(game, candidate);
  const EpsilonBound bound = epsilon_bound(game, all_c);
  const BootstrapResult boot = bootstrap_gain(game, candidate, resamples, derive_seed({ctx.seed, 0xB0}));
  const double base = game.payoff(all_c, candidate).mean;

  json deviations = json::array();
  for (std::size_t d = 0; d < roster.size(); ++d) {
    if (static_cast<int>(d) == candidate) continue;
    const double u = game.payoff(deviation_profile(all_c, candidate, static_cast<int>(d)), static_cast<int>(d)).mean;
    deviations.push_back({{"strategy", roster[d].label}, {"payoff", u}, {"gain", u - base}});
  }

  json cliques = json::array();
  std::optional<double> mixture_prob;
  if (c.contains("cliques")) {
    if (!c["cliques"].is_array()) throw ConfigError("cliques", "must be an array of label arrays");
    for (const auto& cj : c["cliques"]) {
      const auto clique = labels_to_indices(roster, cj, "cliques");
      require_complete(game, clique);
      json entry = {{"strategies", json::array()}};
      for (int s : clique) entry["strategies"].push_back(roster[s].label);
      if (run_dominance) {
        json survivors = json::array();
        for (int s : iterated_dominance(game, clique)) survivors.push_back(roster[s].label);
        entry["undominated"] = survivors;
      }
      if (run_replicator) {
        const auto r = replicator_dynamics(game, clique, {}, ropt);
        json mix = json::object();
        for (int s : clique) mix[roster[s].label] = r.mixture[s];
        entry["replicator"] = {{"mixture", mix}, {"steps", r.steps}, {"converged", r.converged},
                               {"regret", r.regret}};
        if (std::find(clique.begin(), clique.end(), candidate) != clique.end()) {
          entry["candidate_probability"] = r.mixture[candidate];
          if (!mixture_prob) mixture_prob = r.mixture[candidate];
        }
      }
      cliques.push_back(entry);
    }
  }

  const std::string label = env_label(merged->environment);
  const auto num_or_null = [](double x) { return std::isfinite(x) ? json(x) : json(nullptr); };
  const json report = {
      {"schema_version", io::kSchemaVersion},
      {"environment", label},
      {"candidate", candidate_label},
      {"profiles_in_table", game.table().size()},
      {"all_candidate_payoff", base},
      {"epsilon", epsilon},
      {"epsilon_bound", {{"epsilon", bound.epsilon}, {"exact", bound.exact}, {"evaluated", bound.evaluated},
                         {"possible", bound.possible}}},
      {"best_deviation", boot.best_deviation >= 0 ? json(roster[boot.best_deviation].label) : json(nullptr)},
      {"deviations", deviations},
      {"summary",
       {{"gain_percent", num_or_null(boot.gain_percent)},
        {"adjusted_gain_percent", num_or_null(boot.adjusted_gain_percent)},
        {"nash_probability", boot.nash_probability},
        {"mixture_probability", mixture_prob ? json(*mixture_prob) : json(nullptr)}}},
      {"cliques", cliques}};

  std::string text = fmt::format("{:<10} {:>8} {:>17} {:>9} {:>12}\n", "Env(M, N)", "Gain %",
                                 "Adjusted gain %", "Pr(Nash)", "Pr(mixture)");
  text += fmt::format("{:<10} {:>8.2f} {:>17.2f} {:>9.3f} {:>12}\n", label, boot.gain_percent,
                      boot.adjusted_gain_percent, boot.nash_probability,
                      mixture_prob ? fmt::format("{:.3f}", *mixture_prob) : std::string("-"));
  text += fmt::format("candidate {}: all-candidate payoff {:.4f}, epsilon {:.4f}{}\n", candidate_label, base,
                      epsilon,
                      boot.best_deviation >= 0 ? " (best deviation " + roster[boot.best_deviation].label + ")"
                                               : std::string());
  std::cout << text;

  Outputs outputs;
  outputs.add("analysis.json", io::dump(report));
  outputs.add("analysis.txt", text);
  outputs.write(ctx, "analyze-game");
  return kExitOk;
}

int cmd_verify(const CommonOptions& opt) {
  fs::path dir = !opt.input.empty() ? fs::path(opt.input) : opt.out ? fs::path(*opt.out) : fs::path();
  if (dir.empty()) throw ConfigError("out", "verify needs a run directory (positional or --out)");
  const json manifest = io::read_json_file((dir / "manifest.json").string());
  if (!manifest.contains("outputs") || !manifest["outputs"].is_array())
    throw ConfigError("manifest.json", "no outputs listed");
  int bad = 0;
  for (const auto& o : manifest["outputs"]) {
    const auto name = field<std::string>(o, "file");
    const fs::path path = dir / name;
    if (!fs::exists(path)) {
      std::cout << fmt::format("MISSING  {}\n", name);
      ++bad;
      continue;
    }
    const bool ok = sha256_hex(io::read_text_file(path.string())) == field<std::string>(o, "sha256");
    std::cout << fmt::format("{}  {}\n", ok ? "OK      " : "MISMATCH", name);
    bad += !ok;
  }
  if (bad > 0) throw IncompleteDataError(fmt::format("{} output(s) failed verification", bad));
  return kExitOk;
}

int cmd_describe_dist(const CommonOptions& opt) {
  fs::path input = opt.input;
  std::optional<Context> ctx;
  if (!opt.config_path.empty()) {
    ctx = load_context(opt, false);
    if (input.empty()) input = resolve(*ctx, field<std::string>(ctx->config, "distribution"));
  }
  if (input.empty()) throw ConfigError("distribution", "missing (positional path or config key)");
  const auto dist = load_distribution(input);
  const auto stats = describe(dist);
  std::cout << stats_table(stats);
  std::optional<std::string> out = opt.out;
  if (!out && ctx && !ctx->out.empty()) out = ctx->out.string();
  if (out) {
    Context c = ctx ? *ctx : Context{};
    if (!ctx) c.started_utc = utc_now();
    c.out = *out;
    c.echo["distribution"] = input.filename().string();
    Outputs outputs;
    outputs.add("description.json", io::dump({{"schema_version", io::kSchemaVersion},
                                               {"num_goods", dist.num_goods()},
                                               {"price_cap", dist.price_cap()},
                                               {"stats", stats_json(stats)}}));
    outputs.write(c, "describe-dist");
  }
  return kExitOk;
}

int run_guarded(int (*command)(const CommonOptions&), const CommonOptions& opt) {
  try {
    return command(opt);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IncompleteDataError& e) {
    std::cerr << "incomplete data: " << e.what() << "\n";
    return kExitIncomplete;
  } catch (const SimulationError& e) {
    std::cerr << "simulation failure: " << e.what() << "\n";
    return kExitSimulation;
  } catch (const ProtocolViolation& e) {
    std::cerr << "simulation failure: protocol violation: " << e.what() << "\n";
    return kExitSimulation;
  } catch (const json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "simulation failure: " << e.what() << "\n";
    return kExitSimulation;
  }
}

}  // namespace saa::cli
