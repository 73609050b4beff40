// End-to-end checks of the rsl binary: golden byte-for-byte outputs for the
// documented commands and every error path, plus a few semantic probes.
// The binary and golden directory come from RSL_BIN / RSL_GOLDEN, which the
// test runner sets.

#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int status;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const char* bin = std::getenv("RSL_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "RSL_BIN must point at the rsl binary");
  std::string cmd = env_prefix + (env_prefix.empty() ? "" : " ") + bin + " " +
                    args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int rc = pclose(pipe);
  return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

std::string golden(const std::string& name) {
  const char* dir = std::getenv("RSL_GOLDEN");
  REQUIRE_MESSAGE(dir != nullptr, "RSL_GOLDEN must point at the golden directory");
  std::ifstream in(std::string(dir) + "/" + name, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("golden: spectrum of a simple kink") {
  RunResult r = run_cli("spectrum --expr 'abs(t - 1/2)'");
  CHECK(r.status == 0);
  CHECK(r.out == golden("spectrum_abs.json"));
}

TEST_CASE("golden: glued generator") {
  RunResult r = run_cli("generator --prime R:1/2:1");
  CHECK(r.status == 0);
  CHECK(r.out == golden("generator_r1.json"));
}

TEST_CASE("golden: capped chain above a minimal prime") {
  RunResult r = run_cli("chain --mode ppoln --cap 2 --prime Lmin:1/2");
  CHECK(r.status == 0);
  CHECK(r.out == golden("chain_capped.json"));
}

TEST_CASE("golden error: syntax") {
  RunResult r = run_cli("parse --expr 't + * 2'");
  CHECK(r.status == 2);
  CHECK(r.out == golden("err_syntax.json"));
}

TEST_CASE("golden error: discontinuous piecewise block") {
  RunResult r = run_cli("lattice --expr 'piecewise{[0,1/2): t; [1/2,1]: 1 - 2*t}'");
  CHECK(r.status == 2);
  CHECK(r.out == golden("err_discontinuous.json"));
}

TEST_CASE("golden error: degree cap exceeded") {
  RunResult r = run_cli("lattice --expr 't^3' --cap 2");
  CHECK(r.status == 2);
  CHECK(r.out == golden("err_cap.json"));
}

TEST_CASE("golden error: evaluation point outside the domain") {
  RunResult r = run_cli("eval --expr 't' --at 3/2");
  CHECK(r.status == 2);
  CHECK(r.out == golden("err_domain.json"));
}

TEST_CASE("golden error: generator of a minimal prime") {
  RunResult r = run_cli("generator --prime Lmin:1/2");
  CHECK(r.status == 2);
  CHECK(r.out == golden("err_minimal.json"));
}

TEST_CASE("usage errors exit 1 without JSON on stdout") {
  RunResult r = run_cli("spectrum --no-such-flag");
  CHECK(r.status == 1);
  CHECK(r.out.empty());
  RunResult r2 = run_cli("");
  CHECK(r2.status == 1);
}

TEST_CASE("eval prints a bare rational value") {
  RunResult r = run_cli("eval --expr 'piecewise{[0,1/2): 1 - t; [1/2,1]: t}' --at 1/4");
  CHECK(r.status == 0);
  CHECK(r.out == "{\"value\":\"3/4\"}\n");
}

TEST_CASE("membership answers in both directions") {
  RunResult in = run_cli("member --expr '(t - 1/2)^2' --ideal-of 'abs(t - 1/2)'");
  CHECK(in.status == 0);
  CHECK(in.out == "{\"member\":true}\n");
  RunResult out = run_cli("member --expr 'abs(t - 1/2)' --ideal-of '(t - 1/2)^2'");
  CHECK(out.status == 0);
  CHECK(out.out == "{\"member\":false}\n");
  RunResult pr = run_cli("member --expr 't - 1/2' --prime M:1/2");
  CHECK(pr.status == 0);
  CHECK(pr.out == "{\"member\":true}\n");
}

TEST_CASE("chain length queries distinguish capped from uncapped") {
  RunResult capped = run_cli("chain --max-length --cap 3");
  CHECK(capped.out == "{\"max_chain_length\":3}\n");
  RunResult open = run_cli("chain --max-length");
  CHECK(open.out == "{\"max_chain_length\":null}\n");
}

TEST_CASE("norm encloses the gauge") {
  RunResult r = run_cli("norm --expr '(t - 1/2)^2' --base 'abs(t - 1/2)'");
  CHECK(r.status == 0);
  CHECK(r.out == "{\"hi\":\"1/2\",\"lo\":\"511/1024\"}\n");
}

TEST_CASE("seed env var overrides the flag") {
  RunResult a = run_cli("atomic --dim 2 --seed 5");
  RunResult b = run_cli("atomic --dim 2 --seed 5", "RSL_SEED=9");
  CHECK(a.out.find("\"seed\":5") != std::string::npos);
  CHECK(b.out.find("\"seed\":9") != std::string::npos);
}

TEST_CASE("text mode renders a table") {
  RunResult r = run_cli("lattice --expr 'abs(t - 1/2)' --text");
  CHECK(r.status == 0);
  CHECK(r.out.find("segment") != std::string::npos);
  CHECK(r.out.find("1/2 - t") != std::string::npos);
}
