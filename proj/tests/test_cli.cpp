#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef PITA_BINARY
#error "PITA_BINARY must name the pita executable"
#endif

namespace {

struct Invocation {
  int code = -1;
  std::string out;
};

Invocation run(const std::string& args) {
  const std::string cmd = std::string(PITA_BINARY) + " " + args + " 2>&1";
  Invocation r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(CliTest, CoalgPrintsDeltaA2) {
  const Invocation r = run("coalg --n 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "2 A1.A1 (x) A2 + 1 A2 (x) A1");
}

TEST(CliTest, FactorSinglePoint) {
  const Invocation r = run("factor --instance fin --map '[1]' --cod 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("pi=[1]"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("eta=[1]"), std::string::npos) << r.out;
}

TEST(CliTest, FactorWorkedExample) {
  const Invocation r = run("factor --map '[3,2,1,1,4,2,3]' --json");
  EXPECT_EQ(r.code, 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["factor"]["pi"]["values"], nlohmann::json::parse("[5,3,1,2,7,4,6]"));
  EXPECT_EQ(j["factor"]["eta"]["values"], nlohmann::json::parse("[1,1,2,2,3,3,4]"));
  EXPECT_EQ(j["factor"]["eta"]["cod"], 4);
  const Invocation t = run("factor --map '[3,2,1,1,4,2,3]'");
  EXPECT_NE(t.out.find("pi=[5,3,1,2,7,4,6]"), std::string::npos) << t.out;
  EXPECT_NE(t.out.find("eta=[1,1,2,2,3,3,4]"), std::string::npos) << t.out;
}

TEST(CliTest, AllPasses) {
  const Invocation r = run("all");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("SUMMARY passed="), std::string::npos);
  EXPECT_NE(r.out.find(" failed=0 "), std::string::npos);
}

TEST(CliTest, JsonOutputIsByteStable) {
  const Invocation a = run("all --json");
  const Invocation b = run("all --json");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.front(), '{');
}

TEST(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run("axioms --instance sets").code, 2);
  EXPECT_EQ(run("axioms --bound 0").code, 2);
  EXPECT_EQ(run("nerve --maxlen 0").code, 2);
  EXPECT_EQ(run("factor --map '[3,0]'").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("coalg").code, 2);
  EXPECT_EQ(run("coalg --n 2 --instance fin").code, 2);
}

TEST(CliTest, FailedCheckExitsOne) {
  const Invocation r = run("coalg --check coassoc --bound 2");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("[1,1]:2->1"), std::string::npos) << r.out;
}

TEST(CliTest, NerveAndDecompPass) {
  EXPECT_EQ(run("nerve --check strict --bound 2 --maxlen 3").code, 0);
  EXPECT_EQ(run("nerve --check opfib --n 1").code, 0);
  EXPECT_EQ(run("decomp --bound 3").code, 0);
  EXPECT_EQ(run("axioms --instance fin-surj --bound 3").code, 0);
}
