#ifndef KUIPER_CONFIG_HPP
#define KUIPER_CONFIG_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace kuiper {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class GaugeKind { Identity, Random };

const char* to_string(GaugeKind kind);
GaugeKind parse_gauge(const std::string& text);

/// Environment variable naming the default config file.
inline constexpr const char* kConfigEnvVar = "KUIPER_CONFIG";

struct RunConfig {
  int n = 6;
  int grid = 8;
  std::uint64_t seed = 42;
  GaugeKind gauge = GaugeKind::Identity;
  std::string out;
  std::map<std::string, double> tolerances;  // full check name -> threshold
  double memory_guard = 1e6;                 // max N * G^2 * dim Lambda coefficients

  /// Throws ConfigError on out-of-range fields.
  void validate() const;
  double tolerance(const std::string& name, double fallback) const;
  double coefficient_count() const;
};

/// Applies one `key = value` setting. Keys: n, grid, seed, gauge, out,
/// memory_guard, tol.<check name>.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

/// Parses `name=value` as given to --tol.
std::pair<std::string, double> parse_tolerance(const std::string& text);

/// Line-oriented `key = value` text; `#` starts a comment.
RunConfig parse_config_text(const std::string& text, RunConfig base = {});
RunConfig load_config_file(const std::string& path, RunConfig base = {});

}  // namespace kuiper

#endif  // KUIPER_CONFIG_HPP
