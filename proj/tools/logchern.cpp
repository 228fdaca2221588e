#include <iostream>

#include "CLI11.hpp"
#include "logchern/bundled.hpp"
#include "logchern/cli.hpp"

int main(int argc, char** argv) {
  using namespace logchern;
  CLI::App app{"Chern classes and CSM classes of hyperplane arrangements"};
  app.require_subcommand(0, 1);
  bool list = false;
  app.add_flag("--list-examples", list, "List the bundled arrangements");

  JobConfig cfg;
  std::string format = "text";
  std::size_t chart = 0;
  int degree_cap = 200;
  std::uint64_t seed = 0;
  std::string module;

  const std::map<std::string, std::string> help{
      {"lattice", "Intersection lattice with Moebius values"},
      {"poincare", "Poincare polynomials of A and PA"},
      {"csm", "CSM classes of the complement and of the divisor"},
      {"modules", "Logarithmic modules, resolutions and freeness"},
      {"resolution", "Minimal free resolution of one log module"},
      {"chern", "Chern polynomials from resolutions"},
      {"nval", "Length N of the Ext^1 sheaf of Omega^1(PA)"},
      {"verify", "Check c(Omega^1(PA)^v) = c_SM(M(PA)) + defect"},
  };
  std::vector<CLI::App*> subs;
  for (const auto& name : cli_commands()) {
    CLI::App* s = app.add_subcommand(name, help.at(name));
    s->add_option("input", cfg.input, "Arrangement JSON file");
    s->add_option("--example", cfg.example, "Bundled arrangement name");
    s->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    s->add_flag("--timing", cfg.timing, "Report wall time");
    s->add_flag("--assume-locally-tame", cfg.assume_locally_tame, "Assert local tameness (l >= 5)");
    s->add_option("--chart", chart, "Preferred chart coordinate for per-flat N");
    s->add_option("--degree-cap", degree_cap, "Degree cap for Hilbert function loops");
    s->add_option("--seed", seed, "Seed for the randomized deconing check");
    s->add_option("--module", module, "D, D0, Omega1 or Omega1_0");
    s->add_flag("--no-matrices", cfg.no_matrices, "Omit the resolution maps");
    subs.push_back(s);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }
  if (list) {
    for (const auto& e : bundled_examples()) std::cout << e.name << "  " << e.description << "\n";
    return 0;
  }
  CLI::App* chosen = nullptr;
  for (auto* s : subs)
    if (s->parsed()) chosen = s;
  if (!chosen) {
    std::cerr << app.help();
    return kExitInput;
  }
  cfg.command = chosen->get_name();
  cfg.format = format == "json" ? OutputFormat::kJson : OutputFormat::kText;
  if (chosen->count("--chart")) cfg.chart = chart;
  if (chosen->count("--degree-cap")) cfg.degree_cap = degree_cap;
  if (chosen->count("--seed")) cfg.seed = seed;
  if (chosen->count("--module")) cfg.module = module;

  RunResult r = run(cfg);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
