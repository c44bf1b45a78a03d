#include "kuiper/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <tuple>

namespace kuiper {

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass(); });
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void sort_checks(std::vector<Check>& checks) {
  std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) {
    return std::tie(a.suite, a.name) < std::tie(b.suite, b.name);
  });
}

nlohmann::ordered_json to_json(const Report& report) {
  nlohmann::ordered_json doc;
  doc["env"] = {
      {"n", report.env.n},
      {"grid", report.env.grid},
      {"seed", report.env.seed},
      {"gauge", report.env.gauge},
      {"timestamp", report.env.timestamp},
      {"version", report.env.version},
  };
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back({
        {"name", c.full_name()},
        {"anchor", c.anchor},
        {"value", c.value},
        {"threshold", c.threshold},
        {"pass", c.pass()},
    });
  }
  doc["checks"] = std::move(checks);
  doc["pass"] = report.pass();
  return doc;
}

Report report_from_json(const nlohmann::ordered_json& doc) {
  Report report;
  const auto& env = doc.at("env");
  report.env.n = env.at("n").get<int>();
  report.env.grid = env.at("grid").get<int>();
  report.env.seed = env.at("seed").get<std::uint64_t>();
  report.env.gauge = env.at("gauge").get<std::string>();
  report.env.timestamp = env.at("timestamp").get<std::string>();
  report.env.version = env.at("version").get<std::string>();
  for (const auto& item : doc.at("checks")) {
    const auto full = item.at("name").get<std::string>();
    const auto dot = full.find('.');
    Check c;
    c.suite = full.substr(0, dot);
    c.name = dot == std::string::npos ? std::string() : full.substr(dot + 1);
    c.anchor = item.at("anchor").get<std::string>();
    c.value = item.at("value").get<double>();
    c.threshold = item.at("threshold").get<double>();
    report.checks.push_back(std::move(c));
  }
  return report;
}

std::string render_json(const Report& report) { return to_json(report).dump(2) + "\n"; }

std::string render_text(const Report& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    char line[256];
    std::snprintf(line, sizeof line, "[%s] %-44s %-10s value=%.3e threshold=%.3e\n", c.pass() ? "PASS" : "FAIL",
                  c.full_name().c_str(), c.anchor.c_str(), c.value, c.threshold);
    out << line;
  }
  for (const auto& s : report.summary) {
    out << s << "\n";
  }
  const auto failed = std::count_if(report.checks.begin(), report.checks.end(), [](const Check& c) { return !c.pass(); });
  out << report.checks.size() - failed << "/" << report.checks.size() << " checks passed\n";
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  out << content;
  out.flush();
  if (!out) {
    throw IoError("failed writing '" + path + "'");
  }
}

}  // namespace kuiper
