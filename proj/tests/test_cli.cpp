#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(OCTOPLANE_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

TEST(Cli, Table) {
  const Result r = run("table");
  EXPECT_EQ(r.code, 0);
  // row e2, column e6
  const auto row = r.out.find("\n  e2");
  ASSERT_NE(row, std::string::npos);
  const std::string line = r.out.substr(row + 1, r.out.find('\n', row + 1) - row - 1);
  EXPECT_EQ(line.substr(4 * 7, 4), "  e1") << line;
}

TEST(Cli, Act) {
  Result r = run("act --element 'u(e1;0)' --point '(1/2,0)'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(3/5 + 1/5 e1, 0)\n");
  r = run("act --element 'a(1)' --point '(0,0)'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(0, 0)\n");
  r = run("act --element 'a(2)' --point '(1/2,0)' --backend float");
  EXPECT_EQ(r.out.rfind("(0.846153846153846", 0), 0u) << r.out;  // 11/13 to 17 significant digits
  EXPECT_EQ(r.out.substr(r.out.size() - 5), ", 0)\n");
}

TEST(Cli, Coords) {
  Result r = run("coords --point '(1/3, 2/3 e2)'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("e^t0 = 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("z0   = e2\n"), std::string::npos);
  r = run("coords --point '(1/2, 0)'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("falling back"), std::string::npos);
}

TEST(Cli, Triality) {
  const Result r = run("triality --word 'e1' --x 'e2' --y 'e3'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("relation  holds"), std::string::npos);
}

TEST(Cli, Verify) {
  Result r = run("verify --suite center --trials 20");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS  center"), std::string::npos);
  r = run("verify --suite center --trials 5 --json -");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.front(), '{');
  r = run("verify --suite nonexistent");
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, ErrorCodes) {
  Result r = run("act --element 'u(e1;0)' --point '(1,0)'");
  EXPECT_EQ(r.code, 1) << r.out;
  EXPECT_NE(r.out.find("domain error"), std::string::npos);
  r = run("act --element 'u(e1;0)' --point '(1/2,0' ");
  EXPECT_EQ(r.code, 2) << r.out;
  r = run("act --element 'w(1)' --point '(0,0)'");
  EXPECT_EQ(r.code, 2) << r.out;
  EXPECT_NE(r.out.find("w(1)"), std::string::npos) << r.out;
  r = run("act --bogus");
  EXPECT_EQ(r.code, 2);
  r = run("table --backend quad");
  EXPECT_EQ(r.code, 2);
  r = run("--help");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("u(y; z)"), std::string::npos);
}

}  // namespace
