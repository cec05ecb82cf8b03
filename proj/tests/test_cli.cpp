#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int         code = -1;
  std::string out;
};

Run run(std::string const& args) {
  std::string const cmd = std::string(AUTORB_CLI_PATH) + " " + args + " 2>/dev/null";
  Run               r;
  FILE*             pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) {
    r.out.append(buf, n);
  }
  int const status = pclose(pipe);
  r.code           = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("build reports invariants as JSON") {
  Run const r = run("build cyclic:6");
  REQUIRE(r.code == 0);
  auto const j = nlohmann::json::parse(r.out);
  CHECK(j["order"] == 6);
  CHECK(j["abelian"] == true);
  CHECK(j["exponent"] == 6);
}

TEST_CASE("presentation files are accepted") {
  Run const r = run("maol " AUTORB_DSL_DIR "/quaternion.pc");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["maol"] == 6);
}

TEST_CASE("maol of Alt(5)") {
  Run const r = run("maol alt:5");
  REQUIRE(r.code == 0);
  auto const j = nlohmann::json::parse(r.out);
  CHECK(j["maol"] == 24);
  CHECK(j["aut_order"] == 120);
}

TEST_CASE("exit codes") {
  CHECK(run("build " AUTORB_TEST_DATA "/broken.pc").code == 2);
  CHECK(run("build no-such-group:3").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("build cyclic:5000").code == 3);
  CHECK(run("build cyclic:100 --cap 50").code == 3);
  CHECK(run("verify simple-scan").code == 0);
  CHECK(run("verify no-such-suite").code == 2);
}

TEST_CASE("table output") {
  Run const r = run("verify simple-scan --format table");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("checks passed") != std::string::npos);
}

TEST_CASE("output is deterministic across runs and thread counts") {
  Run const a = run("verify classification --jobs 1");
  Run const b = run("verify classification --jobs 2");
  Run const c = run("verify classification --jobs 2");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(b.out == c.out);
}

TEST_CASE("--out writes the document") {
  std::string const path = "cli_out_test.json";
  std::remove(path.c_str());
  Run const r = run("maol sym:3 --out " + path);
  REQUIRE(r.code == 0);
  std::ifstream      in(path);
  std::stringstream  ss;
  ss << in.rdbuf();
  CHECK(nlohmann::json::parse(ss.str())["maol"] == 3);
  std::remove(path.c_str());
}
