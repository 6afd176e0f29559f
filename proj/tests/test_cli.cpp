#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <unistd.h>

#include "fixtures.hpp"
#include "hyperhorn/process.hpp"
#include "hyperhorn/system.hpp"

using namespace hyperhorn;
using hhtest::bench;
namespace fs = std::filesystem;

namespace {

struct Cli {
  fs::path out = fs::temp_directory_path() / ("hh_cli_" + std::to_string(::getpid()));

  ~Cli() {
    std::error_code ec;
    fs::remove_all(out, ec);
  }

  ProcessResult run(std::vector<std::string> args, double timeout = 600) {
    args.insert(args.begin(), HH_CLI_PATH);
    args.push_back("--out");
    args.push_back(out.string());
    return run_process(args, timeout);
  }
};

}  // namespace

TEST(Cli, EmitOnlyWritesFiles) {
  Cli c;
  ProcessResult r = c.run({"--system", bench("squares_sum/system.hh"), "--spec", bench("squares_sum/spec.hh"),
                           "--emit-only"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_TRUE(fs::exists(c.out / "horn.smt2"));
  EXPECT_TRUE(fs::exists(c.out / "scheme.txt"));
  EXPECT_TRUE(fs::exists(c.out / "report.json"));
  EXPECT_FALSE(fs::exists(c.out / "transcript.txt"));
  std::string horn = read_file((c.out / "horn.smt2").string());
  EXPECT_EQ(horn.rfind("(set-logic HORN)", 0), 0u);
  // a second run writes the same bytes
  ProcessResult again = c.run({"--system", bench("squares_sum/system.hh"), "--spec",
                               bench("squares_sum/spec.hh"), "--emit-only"});
  ASSERT_EQ(again.exit_code, 0);
  EXPECT_EQ(read_file((c.out / "horn.smt2").string()), horn);
}

TEST(Cli, UsageErrors) {
  Cli c;
  EXPECT_EQ(c.run({"--spec", bench("squares_sum/spec.hh")}).exit_code, 3);
  EXPECT_EQ(c.run({"--bogus"}).exit_code, 3);
  EXPECT_EQ(c.run({"--mode", "sideways", "--system", bench("squares_sum/system.hh"), "--spec",
                   bench("squares_sum/spec.hh")})
                .exit_code,
            3);
  EXPECT_EQ(c.run({"--timeout", "-1", "--system", bench("squares_sum/system.hh"), "--spec",
                   bench("squares_sum/spec.hh")})
                .exit_code,
            3);
  EXPECT_EQ(c.run({"--help"}).exit_code, 0);
}

TEST(Cli, ParseErrorsExitThree) {
  Cli c;
  fs::create_directories(c.out);
  fs::path broken = c.out / "broken.hh";
  std::ofstream(broken) << "(system (vars (a Int)) (tr (= a' (+ a 1)))";
  ProcessResult r = c.run({"--system", broken.string(), "--spec", bench("squares_sum/spec.hh"), "--emit-only"});
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_NE(r.err.find("broken.hh"), std::string::npos) << r.err;
  EXPECT_EQ(c.run({"--system", "/nonexistent.hh", "--spec", bench("squares_sum/spec.hh")}).exit_code, 3);
}

TEST(Cli, RestrictedModeNeedsRestrictions) {
  Cli c;
  ProcessResult r = c.run({"--mode", "forall-exists-restricted", "--system", bench("array_sum/system.hh"),
                           "--spec", bench("array_sum/spec.hh"), "--emit-only"});
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_NE(r.err.find("restrictions"), std::string::npos) << r.err;
  // and ksafety mode refuses them
  r = c.run({"--system", bench("squares_sum/system.hh"), "--spec", bench("squares_sum/spec.hh"),
             "--restrictions", bench("array_sum/restrictions.hh"), "--emit-only"});
  EXPECT_EQ(r.exit_code, 3);
}

TEST(Cli, FiniteModeNeedsLabelDomain) {
  // array_sum labels range over all integers
  Cli c;
  ProcessResult r = c.run({"--mode", "forall-exists-finite", "--system", bench("array_sum/system.hh"), "--spec",
                           bench("array_sum/spec.hh"), "--emit-only"});
  EXPECT_EQ(r.exit_code, 3) << r.err;
  EXPECT_NE(r.err.find("domain"), std::string::npos) << r.err;
}

TEST(Cli, FlippedRunningExampleIsViolated) {
  if (!hhtest::solver_available()) GTEST_SKIP() << "no solver";
  Cli c;
  ProcessResult r = c.run({"--system", bench("squares_sum/system.hh"), "--spec",
                           bench("squares_sum/spec_flipped.hh"), "--timeout", "300", "--jobs", "1"});
  EXPECT_EQ(r.exit_code, 1) << r.out << r.err;
  EXPECT_NE(r.out.find("violated"), std::string::npos) << r.out;
  EXPECT_TRUE(fs::exists(c.out / "transcript.txt"));
  auto j = nlohmann::json::parse(read_file((c.out / "report.json").string()));
  EXPECT_EQ(j.at("verdict").get<std::string>(), "violated");
  EXPECT_EQ(j.at("mode").get<std::string>(), "ksafety");
}

TEST(Cli, AbstractedRunningExampleIsVerified) {
  if (!hhtest::solver_available()) GTEST_SKIP() << "no solver";
  Cli c;
  ProcessResult r = c.run({"--system", bench("squares_sum/system.hh"), "--spec", bench("squares_sum/spec.hh"),
                           "--predicates", bench("squares_sum/predicates.hh"), "--timeout", "120", "--jobs",
                           "1"});
  EXPECT_EQ(r.exit_code, 0) << r.out << r.err;
  auto j = nlohmann::json::parse(read_file((c.out / "report.json").string()));
  EXPECT_EQ(j.at("verdict").get<std::string>(), "verified");
  EXPECT_TRUE(j.at("abstracted").get<bool>());
}

TEST(Cli, MissingSolverIsInconclusive) {
  Cli c;
  ProcessResult r = c.run({"--system", bench("squares_sum/system.hh"), "--spec", bench("squares_sum/spec.hh"),
                           "--solver", "/nonexistent/solver"});
  EXPECT_EQ(r.exit_code, 2) << r.out << r.err;
}
