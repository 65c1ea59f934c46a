#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <json.hpp>

using nlohmann::json;

struct RunResult {
  int status;
  std::string out;
};

static RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(ROOTPOLY_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int rc = pclose(p);
  return {WEXITSTATUS(rc), out};
}

TEST_CASE("json schema of a computed expansion") {
  auto r = run_cli("compute --family A --rank 2 --weight 2,0 --construction mac --format json");
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  CHECK(j["root_system"]["family"] == "A");
  CHECK(j["root_system"]["rank"] == 2);
  CHECK(j["lambda"] == json::array({4, 0}));
  CHECK(j["doubled"] == true);
  REQUIRE(j["coefficients"].size() == 2);
  bool found = false;
  for (const auto& item : j["coefficients"])
    if (item["mu"] == json::array({2, 2})) {
      // (1+q)(1-t)/(1-q t), canonical string
      CHECK(item["value"].get<std::string>().find("q") != std::string::npos);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("latex output of the rank-3 B expansion") {
  auto r = run_cli(
      "compute --family B --rank 3 --weight 2,1,0 --construction ho --format latex");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("p_{2,1,0}") != std::string::npos);
  CHECK(r.out.find("m_{2,1,0}") != std::string::npos);
  CHECK(r.out.find("m_{0,0,0}") != std::string::npos);
}

TEST_CASE("minimal weight gives a single term") {
  auto r = run_cli("compute --family A --rank 3 --weight 1,0,0 --construction ho --format json");
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  CHECK(j["coefficients"].size() == 1);
}

TEST_CASE("inspect views") {
  auto r = run_cli("inspect stabilizer --family B --rank 3 --weight 1,1,0");
  REQUIRE(r.status == 0);
  CHECK(r.out == "4\n");

  auto ri = run_cli("inspect interval --family A --rank 2 --weight 1,1");
  REQUIRE(ri.status == 0);
  CHECK(ri.out == "1,1\n");

  auto rm = run_cli("inspect matrix --family D --rank 3 --weight 2,1,0 "
                    "--construction mac --minuscule vector");
  REQUIRE(rm.status == 0);
  CHECK(rm.out.find("4 rows") != std::string::npos);
  CHECK(rm.out.find("normalization factors") != std::string::npos);
}

TEST_CASE("checks embed pass verdicts") {
  auto r = run_cli("compute --family A --rank 2 --weight 2,0 --construction ho "
                   "--param g=1 --check --format json");
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  CHECK(j["checks"]["eigenfunction"] == "pass");
  CHECK(j["checks"]["orthogonality"] == "pass");
}

TEST_CASE("cache round trip") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "rootpoly-cache-test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::string args = "compute --family B --rank 2 --weight 2,0 --construction ho "
                     "--format json --cache-dir " +
                     dir.string();
  auto r1 = run_cli(args);
  REQUIRE(r1.status == 0);
  json j1 = json::parse(r1.out);
  CHECK(j1["provenance"]["path"] == "ho");

  auto r2 = run_cli(args);
  REQUIRE(r2.status == 0);
  json j2 = json::parse(r2.out);
  CHECK(j2["provenance"]["path"] == "cache");
  CHECK(j1["coefficients"] == j2["coefficients"]);
  CHECK(j1["fingerprint"] == j2["fingerprint"]);

  // different parameter binding, different fingerprint
  auto r3 = run_cli(args + " --param g=2");
  REQUIRE(r3.status == 0);
  json j3 = json::parse(r3.out);
  CHECK(j3["fingerprint"] != j1["fingerprint"]);
  fs::remove_all(dir);
}

TEST_CASE("machine readable errors") {
  auto r = run_cli("compute --family A --rank 2 --weight 1,1,1 --construction ho");
  CHECK(r.status != 0);
  json j = json::parse(r.out);
  CHECK(j["error"]["type"] == "ArityMismatch");

  auto r2 = run_cli("compute --family B --rank 4 --weight 1,0,0,0 --construction mac-general");
  CHECK(r2.status != 0);
  json j2 = json::parse(r2.out);
  CHECK(j2["error"]["type"] == "RankGuardExceeded");
}
