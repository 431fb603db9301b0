#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace saa::cli {

/// Flags shared by every subcommand; each overrides the matching config key.
struct CommonOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> workers;
  std::optional<std::string> out;
  std::string input;  // positional argument for verify / describe-dist
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIncomplete = 3;
inline constexpr int kExitSimulation = 4;

int cmd_derive_sc(const CommonOptions& opt);
int cmd_simulate_profile(const CommonOptions& opt);
int cmd_analyze_game(const CommonOptions& opt);
int cmd_verify(const CommonOptions& opt);
int cmd_describe_dist(const CommonOptions& opt);

/// Runs a command, mapping library exceptions to exit codes and printing the
/// message to stderr.
int run_guarded(int (*command)(const CommonOptions&), const CommonOptions& opt);

}  // namespace saa::cli
