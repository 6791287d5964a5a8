#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "report.hpp"
#include "suites.hpp"

using namespace alcovekit::cli;

namespace {

CliResult run(std::vector<std::string> args, const Config& cfg = {}) { return run_cli(args, cfg); }

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Compares against tests/data/golden/<name>.json; ALCOVEKIT_UPDATE_GOLDEN=1 rewrites the file.
void expect_golden(const std::string& name, const std::vector<std::string>& args) {
  auto res = run(args);
  ASSERT_EQ(res.exit_code, 0) << res.err;
  const std::filesystem::path path = std::filesystem::path(ALCOVEKIT_GOLDEN_DIR) / (name + ".json");
  if (std::getenv("ALCOVEKIT_UPDATE_GOLDEN")) {
    std::ofstream(path, std::ios::binary) << res.out;
    return;
  }
  ASSERT_TRUE(std::filesystem::exists(path)) << path;
  EXPECT_EQ(res.out, read_file(path)) << name;
}

}  // namespace

TEST(Golden, CoeffsA4) { expect_golden("coeffs_A4", {"coeffs", "--type", "A4", "--kmax", "6", "--method", "both"}); }
TEST(Golden, IdealsA2) { expect_golden("ideals_A2", {"ideals", "--type", "A2"}); }
TEST(Golden, AlcovesA1) { expect_golden("alcoves_A1", {"alcoves", "--type", "A1", "--max-length", "3"}); }
TEST(Golden, AlcovesG2Wf2) { expect_golden("alcoves_G2_wf2", {"alcoves", "--type", "G2", "--max-length", "4", "--wf2-only"}); }
TEST(Golden, Fk) { expect_golden("fk_5", {"fk", "--kmax", "5", "--eval", "24"}); }
TEST(Golden, Mcore) { expect_golden("mcore_3", {"mcore", "--m", "3", "--partition", "5,2,1", "--kmax", "3", "--max-length", "4"}); }
TEST(Golden, SevenNumbersA2) { expect_golden("seven_numbers_A2", {"verify", "--suite", "seven-numbers", "--type", "A2"}); }
TEST(Golden, PetersonB2) { expect_golden("peterson_B2", {"verify", "--suite", "peterson", "--type", "B2"}); }

TEST(Cli, EverySuitePassesOnA2) {
  for (const auto& name : suite_names()) {
    std::vector<std::string> args{"verify", "--suite", name};
    if (suite_needs_type(name)) args.insert(args.end(), {"--type", "A2"});
    else if (name == "mcore") args.insert(args.end(), {"--m", "3"});
    auto res = run(args);
    EXPECT_EQ(res.exit_code, 0) << name << "\n" << res.err << res.out;
  }
}

TEST(Cli, Deterministic) {
  std::vector<std::string> args{"verify", "--suite", "gap", "--type", "B2"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, OutputIsCanonicalJson) {
  auto res = run({"ideals", "--type", "A1"});
  ASSERT_EQ(res.exit_code, 0);
  auto j = json::parse(res.out);
  EXPECT_EQ(j["suite"], "ideals");
  EXPECT_EQ(j["type"], "A1");
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j.dump(2) + "\n", res.out);
}

TEST(Cli, SummaryMode) {
  auto res = run({"--summary", "verify", "--suite", "peterson", "--type", "A2"});
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_NE(res.out.find("status PASS"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).exit_code, 2);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).exit_code, 2);
  EXPECT_EQ(run({"coeffs", "--type", "A4"}).exit_code, 2);
  auto bad = run({"ideals", "--type", "D3"});
  EXPECT_EQ(bad.exit_code, 2);
  EXPECT_NE(bad.err.find("usage error"), std::string::npos);
  EXPECT_EQ(run({"verify", "--suite", "peterson"}).exit_code, 2);
}

TEST(Cli, ScaleErrorsAndAllowBig) {
  auto res = run({"coeffs", "--type", "A1", "--kmax", "100"});
  EXPECT_EQ(res.exit_code, 2);
  EXPECT_NE(res.err.find("scale error"), std::string::npos);
  EXPECT_EQ(run({"--allow-big", "coeffs", "--type", "A1", "--kmax", "100"}).exit_code, 0);
  Config tight;
  tight.max_alcoves = 10;
  EXPECT_EQ(run({"alcoves", "--type", "A2", "--max-length", "8"}, tight).exit_code, 2);
}

TEST(Cli, FailingCheckGivesExitOne) {
  Report r("demo", "A1");
  r.check("ok", "anchor", true);
  EXPECT_FALSE(r.failed());
  r.skip("skipped", "anchor", "reason");
  EXPECT_FALSE(r.failed());
  r.check("bad", "anchor", false, {{"value", "1"}});
  EXPECT_TRUE(r.failed());
  EXPECT_EQ(r.to_json()["status"], "fail");
}

TEST(Config, JsonRoundTripAndUnknownKey) {
  Config c;
  c.max_kmax = 7;
  auto back = Config::from_json(c.to_json());
  EXPECT_EQ(back.max_kmax, 7u);
  EXPECT_EQ(back.max_alcoves, c.max_alcoves);
  EXPECT_EQ(Config::from_json(json::parse(R"({"max_length": 5})")).max_length, 5);
  EXPECT_THROW(Config::from_json(json::parse(R"({"bogus": 1})")), std::invalid_argument);
  Config tight;
  tight.max_kmax = 3;
  EXPECT_EQ(run({"fk", "--kmax", "4"}, tight).exit_code, 2);
}
