#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#ifndef PUREREC_CLI
#error "PUREREC_CLI must point at the purerec binary"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(PUREREC_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string tmp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("purerec-cli-" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* king = "'[[1,0],[0,1],[1,1]]'";

}  // namespace

TEST_CASE("derive-uni") {
  const Run r = run("derive-uni '(1-x)^(-1/3)'");
  CHECK(r.code == 0);
  CHECK(r.out.find("3*n*a(n) + (-3*n + 2)*a(n-1) = 0") != std::string::npos);
  CHECK(run("derive-uni 'exp(x^2)'").out.find("n*a(n) - 2*a(n-2) = 0") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  const Run bad = run("derive-uni 'exp(x'");
  CHECK(bad.code == 2);
  CHECK(bad.out.find("parse-error") != std::string::npos);
  CHECK(run("walk2d '[]' -K 3").code == 2);
  CHECK(run("walk2d " + std::string(king) + " -K 0").code == 2);
  CHECK(run("no-such-command").code == 2);
  CHECK(run("--format yaml selftest --quick").code == 2);
}

TEST_CASE("discover: not found exits with 5") {
  const Run r = run("--order-max 1 --degree-max 1 discover --steps " + std::string(king) + " --side 12");
  CHECK(r.code == 5);
  CHECK(r.out.find("no-recurrence-found-within-bounds") != std::string::npos);
  const Run ok = run("discover --steps " + std::string(king) + " --side 30");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("n1*a(n1,n2) + (-2*n2 - 1)*a(n1-1,n2) + (-n1 + 1)*a(n1-2,n2) = 0") != std::string::npos);
}

TEST_CASE("build-scheme then eval") {
  const std::string path = tmp("king.scheme");
  CHECK(run("--out " + path + " build-scheme --steps " + std::string(king) + " --side 30").code == 0);
  CHECK(slurp(path).rfind("scheme\ndimension 2\n", 0) == 0);
  const Run r = run("eval --scheme " + path + " --at 20,40 --at 3,3");
  CHECK(r.code == 0);
  CHECK(r.out.find("a(20,40) = 87063177396677721409") != std::string::npos);
  CHECK(r.out.find("a(3,3) = 63") != std::string::npos);
  const Run fixed = run("eval --scheme " + path + " --at 20,40 --axis-order 2,1");
  CHECK(fixed.out.find("87063177396677721409") != std::string::npos);

  const Run js = run("--format structured eval --scheme " + path + " --at 20,40");
  CHECK(js.code == 0);
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j["results"][0]["status"] == "ok");
  CHECK(j["results"][0]["value"] == "87063177396677721409");

  CHECK(run("eval --scheme " + path + " --at 1,2,3").code == 2);
  std::ofstream(tmp("broken.scheme")) << "scheme\ndimension two\n";
  CHECK(run("eval --scheme " + tmp("broken.scheme") + " --at 1,1").code == 2);
}

TEST_CASE("walk2d text and structured output") {
  const Run r = run("walk2d " + std::string(king) + " -K 10");
  CHECK(r.code == 0);
  CHECK(r.out.find("F(10,20) = 4354393801") != std::string::npos);
  CHECK(r.out.find("1, 3, 13, 63, 321, 1683, 8989") != std::string::npos);
  const std::string path = tmp("walk.json");
  CHECK(run("--out " + path + " walk2d " + std::string(king) + " -K 10 --digits-only").code == 0);
  const auto j = nlohmann::json::parse(slurp(path));
  CHECK(j["value_K_2K"]["value"] == "4354393801");
  CHECK(j["diagonal_recurrence"]["order"] == 2);
}

TEST_CASE("environment variables feed the global options") {
  const Run r = run("discover --steps " + std::string(king) + " --side 12 --axis 1");
  CHECK(r.code == 0);
  setenv("PUREREC_ORDER_MAX", "1", 1);
  const Run limited = run("discover --steps " + std::string(king) + " --side 12 --axis 1");
  unsetenv("PUREREC_ORDER_MAX");
  CHECK(limited.code == 5);
}

TEST_CASE("selftest is seed-deterministic") {
  const Run a = run("--seed 1 selftest --quick");
  const Run b = run("--seed 1 selftest --quick");
  const Run c = run("--seed 2 selftest --quick");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  CHECK(a.out.find("summary: 26 cases, 26 verified") != std::string::npos);
}
