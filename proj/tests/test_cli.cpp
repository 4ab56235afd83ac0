#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dtl/cli.hpp"

using namespace dtl;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "dtl_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(Cli, PaperCounting) {
  Result r = call({"paper", "--check", "counting:3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, paper_check("counting:3").to_string());
  EXPECT_NE(r.out.find("mk:3 is NotP"), std::string::npos);
  EXPECT_NE(r.out.find("mk:4 is True"), std::string::npos);
}

TEST(Cli, EvalSignalOutput) {
  Result r = call({"eval", "--formula", "C2(P)", "--model", "thm2", "--output", "sig"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "domain halfline\nperiod 2/3\npattern (1/3,2/3)\ntransient 0\nprefix {}\n");
  EXPECT_TRUE(equal(parse_signal(r.out), evaluate(parse("C2(P)"), builtin_model(ModelSpec::thm2()))));
}

TEST(Cli, EvalTextOutput) {
  Result r = call({"eval", "--formula", "!P", "--model", "mk:2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, describe_signal(negate(builtin_model(ModelSpec::mk(2)).lookup("P"))));
  EXPECT_EQ(r.out, "true on (0,1/2) modulo 1/2 (line)\n");
}

TEST(Cli, Trivial) {
  Result r = call({"trivial", "--formula", "F1 false", "--model", "mk:3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "False\n");
  EXPECT_EQ(call({"trivial", "--formula", "C2(P)", "--model", "thm2", "--eventually"}).out, "None\n");
  EXPECT_EQ(call({"trivial", "--formula", "C2(P)", "--model", "mk:2"}).out, "NotP\n");
}

TEST(Cli, Equiv) {
  EXPECT_EQ(call({"equiv", "--formula", "C1(P)", "--formula", "F1 P", "--model", "thm2"}).code, 0);
  Result r = call({"equiv", "--formula", "C2(P)", "--formula", "true", "--model", "thm2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "not equivalent\n");
  EXPECT_EQ(call({"equiv", "--formula", "true S P", "--formula", "true", "--model", "thm2"}).code, 1);
  EXPECT_EQ(call({"equiv", "--formula", "true S P", "--formula", "true", "--model", "thm2", "--eventually"}).code, 0);
}

TEST(Cli, BindFiles) {
  auto q = scratch("q.sig");
  write(q, "domain line\nperiod 1\npattern (0,1/2)\n");
  Result r = call({"eval", "--formula", "P & Q", "--model", "mk:4", "--bind", "Q=" + q.string(), "--output", "sig"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "domain line\nperiod 1\npattern [1/4,1/4]\n");
  Result only = call({"eval", "--formula", "F1 Q", "--bind", "Q=" + q.string()});
  EXPECT_EQ(only.code, 0);
  EXPECT_EQ(only.out, "always true (line)\n");

  auto bad = scratch("bad.sig");
  write(bad, "domain line\nperiod one\npattern {}\n");
  Result e = call({"eval", "--formula", "Q", "--bind", "Q=" + bad.string()});
  EXPECT_EQ(e.code, 2);
  EXPECT_NE(e.err.find("bad.sig"), std::string::npos);
  EXPECT_EQ(call({"eval", "--formula", "Q", "--bind", "Q=/nonexistent/file.sig"}).code, 2);
  EXPECT_EQ(call({"eval", "--formula", "Q", "--bind", "Q"}).code, 2);
  // mk:4 is on the full line; a half-line binding cannot join it.
  auto half = scratch("half.sig");
  write(half, "domain halfline\nperiod 1\npattern {}\n");
  EXPECT_EQ(call({"eval", "--formula", "Q", "--model", "mk:4", "--bind", "Q=" + half.string()}).code, 2);
}

TEST(Cli, Enumerate) {
  auto report = scratch("report.txt");
  Result r = call({"enumerate", "--logic", "qtl", "--depth", "2", "--model", "thm2", "--report", report.string(),
                   "--eventually"});
  EXPECT_EQ(r.code, 0) << r.err;
  Env env = builtin_model(ModelSpec::thm2());
  std::string expected =
      trivialization_report(env, enumerate_formulas(Logic::qtl(), 2, env, kCheckBudget), true).to_string();
  EXPECT_EQ(slurp(report), expected);
  EXPECT_EQ(r.out, "total 64 trivial 64 nontrivial 0 truncated 0\n");
  EXPECT_EQ(call({"enumerate", "--logic", "ltl", "--depth", "1", "--model", "thm2", "--report", report.string()}).code,
            2);
  EXPECT_EQ(call({"enumerate", "--logic", "qtl", "--depth", "1", "--model", "thm2", "--report",
                  "/nonexistent/dir/report.txt"})
                .code,
            2);
}

TEST(Cli, OracleCheck) {
  Result r = call({"oracle-check", "--formula", "C2(P) U O1 P", "--model", "thm2", "--samples", "60", "--seed", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, agreement_check(parse("C2(P) U O1 P"), builtin_model(ModelSpec::thm2()), 60, 5).to_string());
  EXPECT_NE(r.out.find("agreement 60/60"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"eval", "--model", "thm2"}).code, 2);
  EXPECT_EQ(call({"eval", "--formula", "P"}).code, 2);
  EXPECT_EQ(call({"eval", "--formula", "P", "--model", "thm2", "--output", "png"}).code, 2);
  EXPECT_EQ(call({"eval", "--formula", "P &", "--model", "thm2"}).code, 2);
  EXPECT_EQ(call({"eval", "--formula", "C0(P)", "--model", "thm2"}).code, 2);
  EXPECT_EQ(call({"eval", "--formula", "Q", "--model", "thm2"}).code, 2);
  EXPECT_EQ(call({"eval", "--formula", "P", "--model", "mk:0"}).code, 2);
  EXPECT_EQ(call({"equiv", "--formula", "P", "--model", "thm2"}).code, 2);
  EXPECT_EQ(call({"paper", "--check", "counting:1"}).code, 2);
  EXPECT_EQ(call({"oracle-check", "--formula", "P", "--model", "thm2", "--samples", "x", "--seed", "1"}).code, 2);
  Result help = call({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("enumerate"), std::string::npos);
}

TEST(Cli, Deterministic) {
  std::vector<std::string> args{"eval", "--formula", "Pn2(P, !P) | C2(P) S O1 P", "--model", "thm3:3", "--output", "sig"};
  Result a = call(args), b = call(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(call({"paper", "--check", "hierarchy:2"}).out, call({"paper", "--check", "hierarchy:2"}).out);
}
