#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include <kuiper/config.hpp>
#include <kuiper/report.hpp>
#include <kuiper/suites.hpp>

using namespace kuiper;

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(KUIPER_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("kuiper_test_" + name);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("config defaults and validation") {
    RunConfig c;
    CHECK(c.n == 6);
    CHECK(c.grid == 8);
    CHECK(c.seed == 42);
    CHECK(c.gauge == GaugeKind::Identity);
    CHECK_NOTHROW(c.validate());
    c.n = 1;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c.n = 2;
    c.grid = 1;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c.grid = 600;
    CHECK_THROWS_AS(c.validate(), ConfigError);  // memory guard
    c.grid = 8;
    c.tolerances["module.positivity"] = 0.0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
  }

  TEST_CASE("config text") {
    const RunConfig c = parse_config_text("# comment\nn = 3\ngrid=5  # trailing\nseed = 7\ngauge = random\n"
                                          "tol.hodge.harmonic_closed = 1e-6\nout = r.json\n");
    CHECK(c.n == 3);
    CHECK(c.grid == 5);
    CHECK(c.seed == 7);
    CHECK(c.gauge == GaugeKind::Random);
    CHECK(c.out == "r.json");
    CHECK(c.tolerance("hodge.harmonic_closed", 1.0) == 1e-6);
    CHECK(c.tolerance("hodge.other", 0.25) == 0.25);
    CHECK_THROWS_AS(parse_config_text("n 3\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("n = three\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("colour = blue\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("gauge = weird\n"), ConfigError);
    CHECK_THROWS_AS(load_config_file("/nonexistent/kuiper.cfg"), ConfigError);

    const auto [name, value] = parse_tolerance("module.norm_identity=1e-30");
    CHECK(name == "module.norm_identity");
    CHECK(value == 1e-30);
    CHECK_THROWS_AS(parse_tolerance("=3"), ConfigError);
    CHECK_THROWS_AS(parse_tolerance("abc"), ConfigError);
  }

  TEST_CASE("check comparison") {
    Check c{"s", "c", "Lemma 1", 1.0, 1.0, false};
    CHECK(c.pass());
    c.strict = true;
    CHECK_FALSE(c.pass());
    CHECK(c.full_name() == "s.c");
  }

  TEST_CASE("JSON schema round trip") {
    Report r;
    r.env = {4, 5, 9, "random", "2026-01-01T00:00:00Z", kVersion};
    r.checks.push_back({"b", "x", "Thm 16", 1e-13, 1e-12, false});
    r.checks.push_back({"a", "y", "Lemma 1", 2.0, 1.0, false});
    sort_checks(r.checks);
    CHECK(r.checks.front().suite == "a");
    CHECK_FALSE(r.pass());

    const auto doc = nlohmann::ordered_json::parse(render_json(r));
    std::vector<std::string> keys;
    for (const auto& item : doc.items()) {
      keys.push_back(item.key());
    }
    CHECK(keys == std::vector<std::string>{"env", "checks", "pass"});
    CHECK(doc["checks"][0]["name"] == "a.y");
    CHECK(doc["checks"][0]["pass"] == false);
    CHECK(doc["pass"] == false);
    CHECK(to_json(report_from_json(doc)) == doc);
    CHECK(render_json(r).back() == '\n');
    CHECK(std::regex_match(std::string(kVersion), std::regex(R"(\d+\.\d+\.\d+)")));
  }

  TEST_CASE("suites are deterministic and complete") {
    RunConfig c;
    c.n = 3;
    c.grid = 4;
    c.gauge = GaugeKind::Random;
    const Report a = run_suites(c, suite_names());
    const Report b = run_suites(c, suite_names(), false);
    REQUIRE(a.checks.size() == b.checks.size());
    CHECK(a.checks.size() >= 25);
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
      CHECK(a.checks[i].full_name() == b.checks[i].full_name());
      CHECK(a.checks[i].value == b.checks[i].value);
      CHECK(a.checks[i].pass());
    }
    for (std::size_t i = 1; i < a.checks.size(); ++i) {
      CHECK(a.checks[i - 1].full_name() < a.checks[i].full_name());
    }
    CHECK_THROWS_AS(run_suites(c, {"nope"}), ConfigError);
  }

  TEST_CASE("minimal truncation passes the module suite") {
    RunConfig c;
    c.n = 2;
    CHECK(run_suites(c, {"module"}).pass());
  }

  TEST_CASE("tolerance override forces a failure") {
    RunConfig c;
    c.tolerances["module.norm_identity"] = 1e-30;
    const Report r = run_suites(c, {"module"});
    CHECK_FALSE(r.pass());
  }

  TEST_CASE("executable exit codes") {
    CHECK(run_cli("verify-module") == 0);
    CHECK(run_cli("verify-module --n 2") == 0);
    CHECK(run_cli("verify-module --tol module.norm_identity=1e-30") == 1);
    CHECK(run_cli("verify-module --n 1") == 2);
    CHECK(run_cli("verify-module --gauge sideways") == 2);
    CHECK(run_cli("verify-module --tol broken") == 2);
    CHECK(run_cli("") == 2);
    CHECK(run_cli("report-all --n 3 --grid 4 --out /nonexistent/dir/r.json") == 2);
    CHECK(run_cli("cohomology --config /nonexistent/kuiper.cfg") == 2);
  }

  TEST_CASE("config file, environment variable and flag precedence") {
    const auto cfg = scratch("precedence.cfg");
    const auto out = scratch("precedence.json");
    {
      std::ofstream f(cfg);
      f << "n = 3\ngrid = 4\nseed = 5\n";
    }
    CHECK(run_cli("verify-module --config " + cfg.string() + " --seed 9 --out " + out.string()) == 0);
    auto doc = nlohmann::json::parse(slurp(out));
    CHECK(doc["env"]["n"] == 3);
    CHECK(doc["env"]["seed"] == 9);

    CHECK(run_cli("verify-module --n 4 --out " + out.string() + " " ) == 0);
    CHECK(nlohmann::json::parse(slurp(out))["env"]["n"] == 4);

    const std::string env_cmd = std::string("KUIPER_CONFIG=") + cfg.string() + " " + KUIPER_CLI_PATH +
                                " verify-module --out " + out.string() + " >/dev/null 2>&1";
    CHECK(std::system(env_cmd.c_str()) == 0);
    CHECK(nlohmann::json::parse(slurp(out))["env"]["grid"] == 4);
    std::filesystem::remove(cfg);
    std::filesystem::remove(out);
  }

  TEST_CASE("cohomology reports the rank tuple") {
    const std::string cmd = std::string(KUIPER_CLI_PATH) + " cohomology --n 2 --grid 4";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string text;
    char buf[512];
    while (fgets(buf, sizeof buf, pipe) != nullptr) {
      text += buf;
    }
    CHECK(pclose(pipe) == 0);
    CHECK(text.find("cohomology ranks (2, 4, 2) expected (2, 4, 2)") != std::string::npos);
  }
}
