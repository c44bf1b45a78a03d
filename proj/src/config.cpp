#include "kuiper/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace kuiper {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
  T value{};
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("invalid value for '" + key + "': '" + text + "'");
  }
  return value;
}

}  // namespace

const char* to_string(GaugeKind kind) { return kind == GaugeKind::Identity ? "identity" : "random"; }

GaugeKind parse_gauge(const std::string& text) {
  if (text == "identity") {
    return GaugeKind::Identity;
  }
  if (text == "random") {
    return GaugeKind::Random;
  }
  throw ConfigError("gauge must be 'identity' or 'random', got '" + text + "'");
}

double RunConfig::coefficient_count() const {
  // dim of Lambda^0 + Lambda^1 + Lambda^2 over R^2
  return static_cast<double>(n) * grid * grid * 4.0;
}

void RunConfig::validate() const {
  if (n < 2) {
    throw ConfigError("n must be at least 2");
  }
  if (grid < 2) {
    throw ConfigError("grid must be at least 2");
  }
  if (!(memory_guard > 0.0)) {
    throw ConfigError("memory_guard must be positive");
  }
  if (coefficient_count() > memory_guard) {
    throw ConfigError("n * grid^2 * 4 = " + std::to_string(static_cast<long long>(coefficient_count())) +
                      " exceeds the memory guard");
  }
  for (const auto& [name, value] : tolerances) {
    if (!(value > 0.0)) {
      throw ConfigError("tolerance for '" + name + "' must be positive");
    }
  }
}

double RunConfig::tolerance(const std::string& name, double fallback) const {
  const auto it = tolerances.find(name);
  return it == tolerances.end() ? fallback : it->second;
}

void apply_setting(RunConfig& config, const std::string& key, const std::string& value) {
  if (key == "n") {
    config.n = parse_number<int>(key, value);
  } else if (key == "grid") {
    config.grid = parse_number<int>(key, value);
  } else if (key == "seed") {
    config.seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "gauge") {
    config.gauge = parse_gauge(value);
  } else if (key == "out") {
    config.out = value;
  } else if (key == "memory_guard") {
    config.memory_guard = parse_number<double>(key, value);
  } else if (key.rfind("tol.", 0) == 0 && key.size() > 4) {
    config.tolerances[key.substr(4)] = parse_number<double>(key, value);
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

std::pair<std::string, double> parse_tolerance(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("tolerance must look like name=value, got '" + text + "'");
  }
  const std::string name = trim(text.substr(0, eq));
  return {name, parse_number<double>(name, trim(text.substr(eq + 1)))};
}

RunConfig parse_config_text(const std::string& text, RunConfig base) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    try {
      apply_setting(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot read config file '" + path + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str(), std::move(base));
}

}  // namespace kuiper
