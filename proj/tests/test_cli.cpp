#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Result {
  int status = -1;
  std::string out;
};

Result run(const std::string& args, bool with_stderr = false) {
  const std::string cmd = std::string(FFSUBSUM_CLI_PATH) + " " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, CountExample) {
  const Result r = run("--p 2 --e 7 count --exclude '0,g^1,g^2,g^3' --k 5 --b 1");
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(has(r.out, "1759038"));
  EXPECT_TRUE(has(r.out, "225150024/128"));
  EXPECT_TRUE(has(r.out, "1758984.563"));
  EXPECT_TRUE(has(r.out, "independent_fast_path"));
}

TEST(Cli, CountJson) {
  const Result r = run("--p 5 --format json count --k 2 --b 0");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("N"), "2");
  EXPECT_EQ(j.at("main_term"), "10/5");
  EXPECT_TRUE(j.at("bound").is_null());
}

TEST(Cli, CountBothMethods) {
  const Result r = run("--p 7 count --exclude 0 --k 2 --b 0 --method both");
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(has(r.out, "methods agree"));
}

TEST(Cli, TableCsvRowSums) {
  const Result r = run("--p 5 --format csv table --exclude 0 --k-range 0:4");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("p,e,q,exclusions,k,b,N,M,main_term,error,bound,bound_mode,method\n", 0), 0u);
  EXPECT_FALSE(has(r.out, "sum_b"));
  const Result text = run("--p 5 table --exclude 0 --k-range 0:4");
  ASSERT_EQ(text.status, 0);
  EXPECT_TRUE(has(text.out, "k = 2: sum_b N = 6 = C(4,2) = 6"));
}

TEST(Cli, InvalidInputExitsTwo) {
  EXPECT_EQ(run("--p 6 count --k 1 --b 0").status, 2);
  EXPECT_EQ(run("--p 5 count --k 9 --b 0").status, 2);
  EXPECT_EQ(run("--p 5 count --k 1 --b 7").status, 2);
  EXPECT_EQ(run("--p 5").status, 2);
  EXPECT_EQ(run("--p 5 --format yaml count --k 1 --b 0").status, 2);
}

TEST(Cli, GuardExceededExitsTwo) {
  std::string word = "0";
  for (int i = 1; i < 128; ++i) word += ",0";
  const Result g = run("--p 2 --e 7 rs distance --n-mode full --k 5 --word " + word, true);
  EXPECT_EQ(g.status, 2);
  EXPECT_TRUE(has(g.out, "guard"));
}

TEST(Cli, RsClassifyAndScan) {
  const Result c = run("--p 7 rs classify --n-mode punctured --k 4 --word 1,4,5,2,3,6 --exhaustive");
  ASSERT_EQ(c.status, 0);
  EXPECT_TRUE(has(c.out, "verdict: deep_hole"));
  EXPECT_TRUE(has(c.out, "distance: 2"));
  const Result s = run("--p 7 --format json rs scan --n-mode punctured --k 3 --exhaustive");
  ASSERT_EQ(s.status, 0);
  EXPECT_EQ(nlohmann::json::parse(s.out).at("deep_holes"), 0);
  EXPECT_EQ(run("--p 7 rs scan --n-mode punctured --k 3 --points 1,2,3").status, 2);
}

TEST(Cli, RsDistance) {
  const Result r = run("--p 7 --format json rs distance --n-mode full --k 2 --word 0,1,2,3,4,5,0");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("distance"), 1);
  EXPECT_EQ(j.at("degree"), 6);
}

TEST(Cli, VerifyIdentitiesPass) {
  const Result r = run("--p 2 verify --max-q 9 --max-c 3 --identities-only");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(has(r.out, "all checks passed"));
}

// The claimed inequalities fail on small fields; verify reports each
// violation and exits nonzero.
TEST(Cli, VerifyReportsInequalityViolations) {
  const Result r = run("--p 2 verify --max-q 9 --max-c 3");
  EXPECT_EQ(r.status, 1);
  EXPECT_TRUE(has(r.out, "general bound"));
  EXPECT_TRUE(has(r.out, "checks failed"));
}

TEST(Cli, VerifyDetectsInjectedFault) {
  const Result r = run("--p 2 verify --max-q 8 --identities-only --inject-fault");
  EXPECT_EQ(r.status, 1);
  EXPECT_TRUE(has(r.out, "FAIL"));
}
