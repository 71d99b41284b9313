#include <gtest/gtest.h>

#include <string>

#include "aisle_router/json_io.hpp"
#include "aisle_router/model.hpp"
#include "aisle_router/reducer.hpp"
#include "test_util.hpp"

using namespace aisle_router;
using test_util::run_cmd;

namespace {

std::string bin() { return test_util::cli_binary(); }
std::string fixture(const std::string& name) {
  return test_util::fixtures_dir() + "/" + name;
}

TEST(CliSolve, SummaryLineAndTourFile) {
  auto r = run_cmd(bin() + " solve " + fixture("e1.json") + " --out cli_e1_tour.json");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "length=24 full_doubles=0\n");
  auto inst = parse_instance(test_util::read_file(fixture("e1.json")));
  auto tour = parse_tour(inst, test_util::read_file("cli_e1_tour.json"));
  EXPECT_TRUE(validate_tour(inst, tour).ok());
  EXPECT_EQ(tour_length(inst, tour), 24);
}

TEST(CliSolve, NoFullDoubleFlagKeepsTheRectangularOptimum) {
  auto r = run_cmd(bin() + " solve " + fixture("e1.json") + " --no-full-double");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "length=24 full_doubles=0\n");
}

TEST(CliSolve, CounterexampleFixturePaysForTheRestriction) {
  auto free_run = run_cmd(bin() + " solve " + fixture("counterexample.json"));
  auto restricted =
      run_cmd(bin() + " solve " + fixture("counterexample.json") + " --no-full-double");
  EXPECT_EQ(free_run.exit_code, 0);
  EXPECT_EQ(restricted.exit_code, 0);
  auto parse_len = [](const std::string& s) {
    return std::stoll(s.substr(s.find("length=") + 7));
  };
  EXPECT_GT(parse_len(restricted.output), parse_len(free_run.output));
}

TEST(CliSolve, ParseFailuresExitWithTwo) {
  EXPECT_EQ(run_cmd(bin() + " solve /nonexistent.json").exit_code, 2);
  test_util::write_file("cli_garbage.json", "{]");
  EXPECT_EQ(run_cmd(bin() + " solve cli_garbage.json").exit_code, 2);
}

TEST(CliOracle, ListsValidatingOptima) {
  auto r = run_cmd(bin() + " oracle " + fixture("e1.json") + " --all --out cli_oracle.json");
  EXPECT_EQ(r.exit_code, 0);
  auto doc = nlohmann::json::parse(test_util::read_file("cli_oracle.json"));
  EXPECT_EQ(doc["length"], 24);
  auto inst = parse_instance(test_util::read_file(fixture("e1.json")));
  ASSERT_GE(doc["optima"].size(), 1u);
  for (const auto& t : doc["optima"]) {
    auto tour = parse_tour(inst, t.dump());
    EXPECT_TRUE(validate_tour(inst, tour).ok());
  }
}

TEST(CliOracle, OversizedInstancesExitWithFour) {
  auto r = run_cmd(bin() + " gen --seed 11 --aisles 6 --picks 12 --max-len 12" +
                   std::string(" --out cli_big.json"));
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(run_cmd(bin() + " oracle cli_big.json").exit_code, 4);
}

TEST(CliReduce, LogsStepsAndRemovesEveryFullDouble) {
  auto inst = parse_instance(test_util::read_file(fixture("e1.json")));
  TourSubgraph t;
  for (int s = 0; s < 3; ++s) t.set(aisle_edge(0, s), 2);
  t.set(top_rail(0), 2);
  t.set(aisle_edge(1, 0), 2);
  ASSERT_TRUE(validate_tour(inst, t).ok());
  test_util::write_file("cli_doubled_tour.json", emit_tour(inst, t));

  auto r = run_cmd(bin() + " reduce " + fixture("e1.json") +
                   " cli_doubled_tour.json --out cli_reduced.json");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("aisle=1 case=3 mirrors=none saved=10"), std::string::npos);
  EXPECT_NE(r.output.find("full_doubles=0"), std::string::npos);
  auto reduced = parse_tour(inst, test_util::read_file("cli_reduced.json"));
  EXPECT_EQ(count_full_aisle_doubles(inst, reduced), 0);
  EXPECT_EQ(tour_length(inst, reduced), 24);
}

TEST(CliReduce, CleanToursPassThroughUnchanged) {
  auto r0 = run_cmd(bin() + " solve " + fixture("e1.json") + " --out cli_clean.json");
  ASSERT_EQ(r0.exit_code, 0);
  auto r = run_cmd(bin() + " reduce " + fixture("e1.json") +
                   " cli_clean.json --out cli_clean_out.json");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("steps=0"), std::string::npos);
  EXPECT_EQ(test_util::read_file("cli_clean.json"),
            test_util::read_file("cli_clean_out.json"));
}

TEST(CliReduce, NonRectangularInstancesExitWithFive) {
  auto inst = parse_instance(test_util::read_file(fixture("counterexample.json")));
  auto sol = run_cmd(bin() + " solve " + fixture("counterexample.json") +
                     " --out cli_cex_tour.json");
  ASSERT_EQ(sol.exit_code, 0);
  EXPECT_EQ(run_cmd(bin() + " reduce " + fixture("counterexample.json") +
                    " cli_cex_tour.json")
                .exit_code,
            5);
}

TEST(CliCheck, ReportsVerdicts) {
  auto ok = run_cmd(bin() + " check " + fixture("e1.json"));
  EXPECT_EQ(ok.exit_code, 0);
  EXPECT_NE(ok.output.find("rectangular=yes"), std::string::npos);

  auto inst = parse_instance(test_util::read_file(fixture("e1.json")));
  TourSubgraph bad;
  bad.set(aisle_edge(0, 0), 2);
  bad.set(aisle_edge(0, 1), 2);
  test_util::write_file("cli_bad_tour.json", emit_tour(inst, bad));
  auto viol = run_cmd(bin() + " check " + fixture("e1.json") + " cli_bad_tour.json");
  EXPECT_EQ(viol.exit_code, 1);
  EXPECT_NE(viol.output.find("uncovered-target"), std::string::npos);
  EXPECT_NE(viol.output.find("vertex=p2.1"), std::string::npos);
}

TEST(CliGen, DeterministicAndBoundsChecked) {
  auto a = run_cmd(bin() + " gen --seed 7 --aisles 3 --picks 4 --rectangular");
  auto b = run_cmd(bin() + " gen --seed 7 --aisles 3 --picks 4 --rectangular");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.output, b.output);
  EXPECT_TRUE(is_rectangular(parse_instance(a.output)));

  EXPECT_EQ(run_cmd(bin() + " gen --picks 5 --aisles 2 --max-len 1").exit_code, 2);
}

TEST(CliRender, ProducesWellFormedSvg) {
  auto sol = run_cmd(bin() + " solve " + fixture("e1.json") + " --out cli_r_tour.json");
  ASSERT_EQ(sol.exit_code, 0);
  auto r = run_cmd(bin() + " render " + fixture("e1.json") +
                   " cli_r_tour.json --out cli_r.svg --labels");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(test_util::xml_well_formed(test_util::read_file("cli_r.svg")));
  EXPECT_EQ(run_cmd(bin() + " render /nonexistent.json --out x.svg").exit_code, 2);
}

}  // namespace
