#ifndef KUIPER_SUITES_HPP
#define KUIPER_SUITES_HPP

#include <string>
#include <vector>

#include "kuiper/config.hpp"
#include "kuiper/kuiper_complex.hpp"
#include "kuiper/report.hpp"
#include "kuiper/sampling.hpp"

namespace kuiper {

struct SuiteResult {
  std::vector<Check> checks;
  std::vector<std::string> summary;
  std::vector<std::string> warnings;
};

// Every suite draws from its own Sampler(seed, stream) so suites may run in
// any order or concurrently without changing results.
SuiteResult module_suite(const RunConfig& config);
SuiteResult equivariance_suite(const RunConfig& config);
SuiteResult cohomology_suite(const RunConfig& config);
SuiteResult hodge_suite(const RunConfig& config);

/// Sorted names accepted by run_suites.
std::vector<std::string> suite_names();

/// Gauge selected by the config; the random gauge comes from a dedicated
/// stream, so every suite sees the same field.
GaugeField make_gauge(const RunConfig& config);

/// Runs the named suites with tolerance overrides applied; checks are merged
/// in (suite, name) order. Throws ConfigError for an unknown suite name.
Report run_suites(const RunConfig& config, const std::vector<std::string>& names, bool parallel = true);

}  // namespace kuiper

#endif  // KUIPER_SUITES_HPP
