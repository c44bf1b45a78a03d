// Command-line driver for the verification suites.
//
// Exit status 0 means every check passed and 1 means a check failed. Bad
// flags, bad config values and unwritable outputs give 2.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kuiper/config.hpp"
#include "kuiper/report.hpp"
#include "kuiper/suites.hpp"

namespace {

struct Command {
  const char* name;
  const char* help;
  std::vector<std::string> suites;
  bool json_default;  // print JSON on stdout when --out is missing
};

int emit(const kuiper::Report& report, const kuiper::RunConfig& config, bool json_default) {
  for (const auto& w : report.warnings) {
    std::cerr << "warning: " << w << "\n";
  }
  const std::string json = kuiper::render_json(report);
  if (!config.out.empty()) {
    kuiper::write_file(config.out, json);
  }
  if (json_default && config.out.empty()) {
    std::cout << json;
  } else {
    std::cout << kuiper::render_text(report);
  }
  return report.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Command> commands{
      {"verify-module", "Fock space and module-structure checks", {"module"}, false},
      {"verify-equivariance", "oscillator representation and equivariance checks", {"equivariance"}, false},
      {"cohomology", "d^2 = 0, CH-equivariance, ranks, symbol, gauge transport", {"cohomology"}, false},
      {"hodge", "harmonic spaces and CH-generator counts", {"hodge"}, false},
      {"report-all", "every suite; JSON report to --out or stdout", kuiper::suite_names(), true},
  };

  CLI::App app{"Kuiper complex and oscillator-module verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kuiper::kVersion);

  std::string config_path;
  std::vector<std::string> tolerances;
  int n = 0;
  int grid = 0;
  std::uint64_t seed = 0;
  std::string gauge;
  std::string out;
  app.add_option("--config", config_path, "key = value config file (default: $KUIPER_CONFIG)");
  auto* n_opt = app.add_option("--n", n, "Fock truncation N (>= 2)");
  auto* grid_opt = app.add_option("--grid", grid, "torus grid resolution G (>= 2)");
  auto* seed_opt = app.add_option("--seed", seed, "random seed");
  auto* gauge_opt = app.add_option("--gauge", gauge, "identity | random")->check(CLI::IsMember({"identity", "random"}));
  auto* out_opt = app.add_option("--out", out, "JSON report path");
  app.add_option("--tol", tolerances, "threshold override <suite.check>=<value>, repeatable");

  std::vector<CLI::App*> subs;
  for (const auto& c : commands) {
    subs.push_back(app.add_subcommand(c.name, c.help));
    subs.back()->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    kuiper::RunConfig config;
    if (config_path.empty()) {
      if (const char* env = std::getenv(kuiper::kConfigEnvVar); env != nullptr && *env != '\0') {
        config_path = env;
      }
    }
    if (!config_path.empty()) {
      config = kuiper::load_config_file(config_path, config);
    }
    if (*n_opt) config.n = n;
    if (*grid_opt) config.grid = grid;
    if (*seed_opt) config.seed = seed;
    if (*gauge_opt) config.gauge = kuiper::parse_gauge(gauge);
    if (*out_opt) config.out = out;
    for (const auto& t : tolerances) {
      const auto [name, value] = kuiper::parse_tolerance(t);
      config.tolerances[name] = value;
    }
    config.validate();

    for (std::size_t i = 0; i < commands.size(); ++i) {
      if (subs[i]->parsed()) {
        const kuiper::Report report = kuiper::run_suites(config, commands[i].suites);
        return emit(report, config, commands[i].json_default);
      }
    }
  } catch (const kuiper::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const kuiper::IoError& e) {
    std::cerr << "output error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
