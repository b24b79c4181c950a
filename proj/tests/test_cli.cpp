#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"

namespace {

struct Run {
  int status;
  std::string out;
};

// Runs the CLI through the shell with stderr folded into stdout.
Run cli(const std::string& args) {
  const std::string cmd = std::string("\"") + GCMONAD_CLI_PATH + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (const std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string corpus(const std::string& name) { return std::string("\"") + GCMONAD_CORPUS_DIR + "/" + name + "\""; }

}  // namespace

TEST_CASE("eval prints the canonical value") {
  const auto r = cli("eval " + corpus("coinarb.gcm"));
  CHECK(r.status == 0);
  CHECK(r.out == "{false: 1}\n{true: 1}\n");
}

TEST_CASE("eval structured output") {
  const auto r = cli("eval --format structured " + corpus("mixed.gcm"));
  CHECK(r.status == 0);
  CHECK(r.out == "{\"generators\":[[[1,\"1/3\"],[3,\"2/3\"]],[[2,\"1/3\"],[3,\"2/3\"]]]}\n");
}

TEST_CASE("eval reads standard input") {
  const auto r = cli("eval - < " + corpus("bcoin.gcm"));
  CHECK(r.status == 0);
  CHECK(r.out == "{false: 1/3, true: 2/3}\n");
}

TEST_CASE("malformed input exits 1 with a position") {
  const auto r = cli("eval " + corpus("missing_semicolon.gcm"));
  CHECK(r.status == 1);
  CHECK(r.out.find("missing_semicolon.gcm:2:1: syntax error") != std::string::npos);
  const auto unbound = cli("eval " + corpus("unbound.gcm"));
  CHECK(unbound.status == 1);
  CHECK(unbound.out.find(":2:11: unbound-variable error") != std::string::npos);
  CHECK(cli("eval /nonexistent/file.gcm").status == 1);
}

TEST_CASE("check-laws") {
  const auto r = cli("check-laws --trials 20 --seed 42");
  CHECK(r.status == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS neg_bindDr_alt") != std::string::npos);
  CHECK(r.out.find("all laws behaved as expected (seed 42)") != std::string::npos);

  const auto one = cli("check-laws --trials 50 --law choiceC");
  CHECK(one.status == 0);
  CHECK(one.out.rfind("PASS choiceC (50 trials, 0 counterexamples)\n", 0) == 0);

  CHECK(cli("check-laws --law nope").status == 1);
  CHECK(cli("check-laws --trials 0").status == 1);
  const auto list = cli("check-laws --list");
  CHECK(list.status == 0);
  CHECK(list.out.find("neg_bindDr_choice (negative control)") != std::string::npos);
}

TEST_CASE("same seed, same output") { CHECK(cli("check-laws --trials 10 --seed 9").out == cli("check-laws --trials 10 --seed 9").out); }

TEST_CASE("monty") {
  const auto r = cli("monty");
  CHECK(r.status == 0);
  CHECK(r.out == "stick: {false: 2/3, true: 1/3}\nswitch: {false: 1/3, true: 2/3}\n");
  CHECK(cli("monty --strategy switch").out == "switch: {false: 1/3, true: 2/3}\n");
  CHECK(cli("monty --strategy sideways").status == 1);
}

TEST_CASE("version and usage") {
  const auto r = cli("version");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("gcmonad ", 0) == 0);
  CHECK(cli("").status == 1);
  CHECK(cli("--help").status == 0);
  CHECK(cli("frobnicate").status == 1);
}
