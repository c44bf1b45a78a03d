#ifndef KUIPER_REPORT_HPP
#define KUIPER_REPORT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace kuiper {

inline constexpr const char* kVersion = "0.1.0";

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One executed check. Passes when value <= threshold, or value < threshold
/// for strict checks. Exact integer comparisons store |actual - expected|
/// against 0.5.
struct Check {
  std::string suite;
  std::string name;
  std::string anchor;
  double value = 0.0;
  double threshold = 0.0;
  bool strict = false;

  std::string full_name() const { return suite + "." + name; }
  bool pass() const { return strict ? value < threshold : value <= threshold; }
};

struct Environment {
  int n = 0;
  int grid = 0;
  std::uint64_t seed = 0;
  std::string gauge;
  std::string timestamp;
  std::string version = kVersion;
};

struct Report {
  Environment env;
  std::vector<Check> checks;  // sorted by (suite, name)
  std::vector<std::string> summary;
  std::vector<std::string> warnings;

  bool pass() const;
};

/// ISO 8601 UTC, second resolution.
std::string utc_timestamp();

void sort_checks(std::vector<Check>& checks);

nlohmann::ordered_json to_json(const Report& report);
/// Inverse of to_json for the env and checks blocks; suite is split off the
/// first '.' of the name and `strict` is not serialized.
Report report_from_json(const nlohmann::ordered_json& doc);

/// Pretty JSON, newline-terminated.
std::string render_json(const Report& report);
/// One line per check plus summary lines.
std::string render_text(const Report& report);

/// Throws IoError when the file cannot be written.
void write_file(const std::string& path, const std::string& content);

}  // namespace kuiper

#endif  // KUIPER_REPORT_HPP
