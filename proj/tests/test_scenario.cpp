#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "orbitcheck/scenario.hpp"
#include "orbitcheck/tables.hpp"

using namespace orbitcheck;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string data_path(const std::string& name) {
  return std::string(ORBITCHECK_TEST_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("builtin configs round-trip through the text format") {
  for (const std::string& name : builtin_scenario_names()) {
    CAPTURE(name);
    ScenarioConfig cfg = builtin_scenario(name);
    std::string text = cfg.serialize();
    ScenarioConfig parsed = ScenarioConfig::parse_string(text);
    CHECK(parsed.serialize() == text);
    CHECK(parsed.id == cfg.id);
    CHECK(parsed.n == cfg.n);
    CHECK(parsed.seed == cfg.seed);
    CHECK(parsed.rules.size() == cfg.rules.size());
  }
}

TEST_CASE("config diagnostics carry line numbers") {
  CHECK_THROWS_WITH_AS(
      ScenarioConfig::parse_string("[scenario]\nid = x\nbogus_line\n"),
      doctest::Contains("line 3"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      ScenarioConfig::parse_string("[scenario]\nid = x\nkind = what\n"),
      doctest::Contains("unknown kind"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      ScenarioConfig::parse_string(
          "[scenario]\nid = x\n\n[outcomes]\na = 1,zz\n"),
      doctest::Contains("line 5"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(ScenarioConfig::parse_string("x = 1\n"),
                       doctest::Contains("section"), std::invalid_argument);
  // Unresolved set members are rejected at parse time.
  CHECK_THROWS_WITH_AS(ScenarioConfig::parse_string("[scenario]\nid = x\n"
                                                    "[outcomes]\na = 1,0\n"
                                                    "[sets]\nA = nope\n"),
                       doctest::Contains("unresolved"), std::invalid_argument);
}

TEST_CASE("a hand-written config runs end to end") {
  const char* text = R"(
# two outcomes, trivial check
[scenario]
id = tiny
kind = orbit
dimension = 2
domain = all
n = 1
seed = 3

[outcomes]
left = 1,0
right = 0,1

[sets]
A = left
B = right
C = left, right

[rules]
rule = frac-optimal

[thetas]
fixed = 2,1
)";
  ScenarioConfig cfg = ScenarioConfig::parse_string(text);
  RunReport report = run_scenario(cfg);
  CHECK(report.scenario_id == "tiny");
  CHECK(report.holds());  // counts (1,1) satisfy n=1
  CHECK(report.seed == 3);
}

TEST_CASE("pacman3 verdict holds for every rule") {
  ScenarioConfig cfg = builtin_scenario("pacman3");
  cfg.sampling.count = 60;  // keep the unit test quick; acceptance runs 1000
  RunReport report = run_scenario(cfg, 7);
  CHECK(report.holds());
  CHECK(report.checks.size() == 15);
  for (const auto& check : report.checks) {
    CHECK(check.at("holds").get<bool>());
    CHECK(check.at("fixed").at("holds").get<bool>());
  }
}

TEST_CASE("mr-actions5 holds at n=4 with a verified certificate") {
  ScenarioConfig cfg = builtin_scenario("mr-actions5");
  cfg.sampling.count = 40;
  RunReport report = run_scenario(cfg, 7);
  CHECK(report.holds());
  const auto& entry = report.checks.at(0);
  CHECK(entry.at("n").get<int>() == 4);
  CHECK(entry.at("certificate").at("conditions_hold").get<bool>());
  CHECK(entry.at("certificate").at("theorem_holds").get<bool>());
}

TEST_CASE("featurized4 holds at n=3 on the positive-and-unique domain") {
  ScenarioConfig cfg = builtin_scenario("featurized4");
  cfg.sampling.count = 60;
  RunReport report = run_scenario(cfg, 7);
  CHECK(report.holds());
}

TEST_CASE("toy-mdp scenario holds") {
  ScenarioConfig cfg = builtin_scenario("toy-mdp");
  cfg.mdp_orbit_samples = 25;
  cfg.mdp_mc_samples = 4000;
  RunReport report = run_scenario(cfg, 7);
  CHECK(report.holds());
  REQUIRE(report.checks.size() == 3);
  CHECK(report.checks.at(0).at("check") == "copy-certificate");
  CHECK(report.checks.at(1).at("violations").get<int>() == 0);
  CHECK(report.checks.at(2).at("value").get<double>() < 0.3);
}

TEST_CASE("an unattainable claim is refuted with exit semantics") {
  ScenarioConfig cfg = builtin_scenario("pacman3");
  cfg.rules = {DecisionRule::parse("frac-optimal")};
  cfg.use_sampling = false;
  cfg.n = 100;
  RunReport report = run_scenario(cfg, 7);
  CHECK_FALSE(report.holds());
  CHECK(report.verdict == "refuted");
}

TEST_CASE("reports round-trip through JSON losslessly") {
  ScenarioConfig cfg = builtin_scenario("pacman3");
  cfg.sampling.count = 10;
  cfg.rules.resize(3);
  RunReport report = run_scenario(cfg, 7);
  RunReport again = RunReport::from_json(report.to_json());
  CHECK(again.to_json() == report.to_json());
  CHECK(again.to_json_string() == report.to_json_string());
}

TEST_CASE("identical runs produce byte-identical reports") {
  ScenarioConfig cfg = builtin_scenario("pacman3");
  cfg.sampling.count = 25;
  std::string first = run_scenario(cfg, 7).to_json_string();
  std::string second = run_scenario(cfg, 7).to_json_string();
  CHECK(first == second);
  // A different seed changes the sampled orbits but not the verdict.
  RunReport other = run_scenario(cfg, 8);
  CHECK(other.holds());
}

TEST_CASE("tables match their golden files") {
  CHECK(reproduce_table(TableId::kPermuteStates) ==
        read_file(data_path("table_permute_states.txt")));
  CHECK(reproduce_table(TableId::kRationalities) ==
        read_file(data_path("table_rationalities.txt")));
  CHECK(reproduce_table(TableId::kCounterexample) ==
        read_file(data_path("table_counterexample.txt")));
  CHECK(reproduce_table(TableId::kPermuteStates, TableFormat::kCsv) ==
        read_file(data_path("table_permute_states.csv")));
  CHECK(reproduce_table(TableId::kRationalities, TableFormat::kCsv) ==
        read_file(data_path("table_rationalities.csv")));
  CHECK(reproduce_table(TableId::kCounterexample, TableFormat::kCsv) ==
        read_file(data_path("table_counterexample.csv")));
}

TEST_CASE("table id parsing") {
  CHECK(parse_table_id("rationalities") == TableId::kRationalities);
  CHECK(table_id_name(TableId::kPermuteStates) == "permute-states");
  CHECK_THROWS_AS(parse_table_id("nope"), std::invalid_argument);
}

namespace {

int run_cli(const std::string& args, std::string* output = nullptr) {
  std::string cmd = std::string(ORBITCHECK_CLI_PATH) + " " + args;
  if (output) {
    cmd += " > /tmp/orbitcheck_cli_test.out 2>/dev/null";
  } else {
    cmd += " > /dev/null 2>&1";
  }
  int status = std::system(cmd.c_str());
  if (output) *output = read_file("/tmp/orbitcheck_cli_test.out");
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("cli exit codes: 0 holds, 2 refuted, 1 usage error") {
  CHECK(run_cli("orbit check --vector 10,5,0 --A 0 --B 1,2 --rule "
                "optimal-indicator --n 2") == 0);
  CHECK(run_cli("orbit check --vector 10,5,0 --A 0 --B 1,2 --rule "
                "frac-optimal --n 100") == 2);
  CHECK(run_cli("orbit check --vector 10,5,0 --A 0 --B 9 --rule frac-optimal "
                "--n 1") == 1);
  CHECK(run_cli("scenario run --builtin no-such-scenario") == 1);
  CHECK(run_cli("scenario run") == 1);
  CHECK(run_cli("table nonsense") == 1);
}

TEST_CASE("cli table output matches the golden bytes") {
  std::string out;
  REQUIRE(run_cli("table rationalities", &out) == 0);
  CHECK(out == read_file(data_path("table_rationalities.txt")));
  REQUIRE(run_cli("table counterexample --format csv", &out) == 0);
  CHECK(out == read_file(data_path("table_counterexample.csv")));
}

TEST_CASE("cli scenario dump round-trips through the parser") {
  std::string out;
  REQUIRE(run_cli("scenario dump --builtin toy-mdp", &out) == 0);
  ScenarioConfig parsed = ScenarioConfig::parse_string(out);
  CHECK(parsed.serialize() == out);
}

TEST_CASE("cli runs a config file and honors seed overrides") {
  ScenarioConfig cfg = builtin_scenario("pacman3");
  cfg.sampling.count = 20;
  cfg.rules.resize(2);
  std::ofstream file("/tmp/orbitcheck_cli_test_config.txt", std::ios::binary);
  file << cfg.serialize();
  file.close();
  std::string out;
  CHECK(run_cli("scenario run --config /tmp/orbitcheck_cli_test_config.txt "
                "--seed 11 --json -",
                &out) == 0);
  RunReport report = RunReport::from_json(nlohmann::json::parse(
      out.substr(0, out.rfind('}') + 1)));
  CHECK(report.seed == 11);
  CHECK(report.holds());
}

TEST_CASE("mdp fixture file matches the builtin") {
  std::ifstream in(data_path("toy_mdp.txt"));
  REQUIRE(in);
  RewardlessMdp from_file = RewardlessMdp::parse(in);
  RewardlessMdp from_builtin = *builtin_scenario("toy-mdp").mdp;
  CHECK(from_file.state_names == from_builtin.state_names);
  CHECK(from_file.transition == from_builtin.transition);
}
