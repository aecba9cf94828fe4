#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  const std::string command =
      std::string(RUNSRULES_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CommandResult result;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("calibrate prints the published limit") {
  const CommandResult r = run_cli("calibrate --scheme M-2/3 --arl0 370.4");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("limit 1.866") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("calibrate --scheme 3/2 --arl0 370.4").exit_code == 2);
  CHECK(run_cli("table 6").exit_code == 2);
  CHECK(run_cli("simulate --scheme 2/2 --limit 1.781 --shift 0 --reps 10")
            .exit_code == 2);
  CHECK(run_cli("evaluate --scheme 2/2 --shifts 1.0").exit_code == 2);
  CHECK(run_cli("evaluate --scheme C1234 --limit 2 --shifts 1.0").exit_code ==
        2);
  CHECK(run_cli("evaluate --scheme 2/2 --limit 1.781 --shifts 1.0 "
                "--stats arl,median")
            .exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("computational failures exit with 1") {
  CHECK(run_cli("calibrate --scheme 2/2 --arl0 2.5").exit_code == 1);
}

TEST_CASE("evaluate emits the published percentile row") {
  const CommandResult r = run_cli(
      "evaluate --scheme M-3/5 --limit 1.358 --shifts 0.8 "
      "--stats percentiles --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "scheme,limit,shift,p5,p25,p50,p75,p95\n"
        "M-3/5,1.358000,0.80,4,9,19,35,71\n");
}

TEST_CASE("degenerate shift range gives a single row") {
  const CommandResult r = run_cli(
      "evaluate --scheme 2/2 --limit 1.781 --shifts 0:0:0.2 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "scheme,limit,shift,arl,sd\n"
        "2/2,1.781000,0.00,369.74,368.27\n");
}

TEST_CASE("simulate output is byte-identical across runs and threads") {
  const std::string base =
      "simulate --scheme 2/2 --limit 1.781 --shift 0 --reps 5000 --seed 1";
  const CommandResult a = run_cli(base + " --threads 1");
  const CommandResult b = run_cli(base + " --threads 1");
  const CommandResult c = run_cli(base + " --threads 2");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output == c.output);
  CHECK(a.output.find("z-score") != std::string::npos);
}

TEST_CASE("table output is byte-identical across runs") {
  const CommandResult a = run_cli("table 4 --format csv");
  const CommandResult b = run_cli("table 4 --format csv");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.substr(0, a.output.find('\n')) ==
        "scheme,limit,shift,arl,p5,p25,p50,p75,p95");
}
