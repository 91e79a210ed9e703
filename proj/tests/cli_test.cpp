// Drives the built command-line tool. Golden files pin the exact output; set
// LNARG_UPDATE_GOLDEN=1 to rewrite them after an intended change.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "support.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs inside the corpus directory so that printed paths stay relative.
Run run(const std::string& args, bool with_stderr = false) {
  std::string cmd = "cd '" LNARG_CORPUS "' && '" LNARG_CLI "' " + args;
  cmd += with_stderr ? " 2>&1" : " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

void expect_golden(const std::string& name, const std::string& actual) {
  const std::string path = std::string(LNARG_GOLDEN "/") + name;
  if (std::getenv("LNARG_UPDATE_GOLDEN")) {
    std::ofstream(path, std::ios::binary) << actual;
    return;
  }
  const auto expected = lnarg::gen::read_text(path);
  ASSERT_FALSE(expected.empty()) << "missing golden file " << path;
  EXPECT_EQ(actual, expected) << "output differs from " << path;
}

}  // namespace

TEST(Cli, ProveWeakening) {
  const auto r = run("prove --labels 0..5 --sequent 'p.3 => p.5'");
  EXPECT_EQ(r.status, 0);
  expect_golden("prove_weakening.txt", r.out);
}

TEST(Cli, ProveReportsNotProvable) {
  const auto r = run("prove --labels 0..5 --sequent 'p.5 => p.3'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "NotProvable\n");
}

TEST(Cli, ProveBudget) {
  const auto r = run("prove --labels 0..5 --budget 2 --sequent 'p.1, q.2 => q.3.p.1'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("BudgetExhausted", 0), 0u);
}

TEST(Cli, Arguments) {
  const auto r = run("arguments --theory uk.lnt");
  EXPECT_EQ(r.status, 0);
  expect_golden("arguments_uk.txt", r.out);
}

TEST(Cli, SolveMaxConsistency) {
  const auto r = run("solve --theory uk_us.lnt --strategy max-consistency");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("DriveRight(AV)"), std::string::npos);
  EXPECT_NE(r.out.find("¬DriveLeft(AV)"), std::string::npos);
  expect_golden("solve_max.txt", r.out);
}

TEST(Cli, SolveJson) {
  const auto r = run("solve --theory uk_us.lnt --strategy caution-first --json");
  EXPECT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.contains("extensions"));
}

TEST(Cli, Report) {
  const auto r = run("report --origin uk.lnt --target us.lnt --strategy max-consistency");
  EXPECT_EQ(r.status, 0);
  expect_golden("report_max.txt", r.out);
}

TEST(Cli, ReportJsonIsStable) {
  const auto a = run("report --origin uk.lnt --target us.lnt --json");
  const auto b = run("report --origin uk.lnt --target us.lnt --json");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  for (const char* key : {"strategy", "adopted", "dropped", "unresolved", "extension"})
    EXPECT_TRUE(j["report"].contains(key)) << key;
}

TEST(Cli, ReportIdenticalTheoriesHasNoChanges) {
  const auto r = run("report --origin uk.lnt --target uk.lnt");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("changes (0):"), std::string::npos);
}

TEST(Cli, StrictExitsOneOnUnresolvedConflicts) {
  EXPECT_EQ(run("report --origin uk.lnt --target us.lnt --strategy caution-first --strict").status,
            1);
  EXPECT_EQ(run("report --origin uk.lnt --target us.lnt --strategy max-consistency --strict").status,
            0);
  EXPECT_EQ(run("solve --theory uk_us.lnt --strategy caution-first --strict").status, 1);
}

TEST(Cli, Export) {
  const auto none = run("export --theory uk_us.lnt --strategy none");
  EXPECT_EQ(none.status, 0);
  expect_golden("figure_none.dot", none.out);
  const auto max = run("export --theory uk_us.lnt --strategy max-consistency");
  EXPECT_EQ(max.status, 0);
  expect_golden("figure_max.dot", max.out);
  EXPECT_EQ(run("export --theory uk_us.lnt --strategy max-consistency").out, max.out);
}

TEST(Cli, ExportToFile) {
  const std::string path = ::testing::TempDir() + "lnarg_export.dot";
  const auto r = run("export --theory uk_us.lnt --out '" + path + "'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(lnarg::gen::read_text(path), run("export --theory uk_us.lnt").out);
  std::remove(path.c_str());
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run("solve --theory missing.lnt").status, 2);
  EXPECT_EQ(run("prove --labels 0..3 --sequent 'p. =>'").status, 2);
  EXPECT_EQ(run("solve --theory uk_us.lnt --bogus").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("report --origin uk.lnt --target us.lnt --strategy gradual").status, 2);
  const auto bad = run("prove --labels 0..3 --sequent 'p.(q =>'", true);
  EXPECT_EQ(bad.status, 2);
  EXPECT_NE(bad.out.find("column"), std::string::npos);
}

TEST(Cli, MalformedTheoryFile) {
  const std::string path = ::testing::TempDir() + "lnarg_bad.lnt";
  std::ofstream(path) << "labels 0,1,2\nfact p(a).1\nnorm p(a).1 => p(a).2\n";
  const auto r = run("solve --theory '" + path + "'", true);
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("p(a).1 =>n p(a).2"), std::string::npos);
  std::remove(path.c_str());
}
