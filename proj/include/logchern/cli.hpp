#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace logchern {

enum class OutputFormat { kText, kJson };

struct JobConfig {
  std::string command;   // lattice, poincare, csm, modules, resolution, chern, nval, verify
  std::string input;     // arrangement file
  std::string example;   // or a bundled arrangement name
  OutputFormat format = OutputFormat::kText;
  bool assume_locally_tame = false;
  std::optional<std::size_t> chart;
  std::optional<int> degree_cap;  // default 200
  std::optional<std::uint64_t> seed;
  std::optional<std::string> module;  // resolution: D, D0, Omega1, Omega1_0 (default)
  bool no_matrices = false;           // resolution: twists only
  bool timing = false;
};

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitHypothesis = 2;

const std::vector<std::string>& cli_commands();
// Throws InputError when a flag does not apply to the command.
void validate(const JobConfig& cfg);
// Never throws; errors become exit codes and text on `err`.
RunResult run(const JobConfig& cfg);

}  // namespace logchern
