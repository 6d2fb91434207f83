#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result sh(const std::string& args) {
  std::string cmd = std::string(UTA_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string tmp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("uta_cli_" + name)).string();
}

const std::string kFig1 = std::string(UTA_ORACLE_DIR) + "/fig1.uta";

}  // namespace

TEST_CASE("cli analyze") {
  auto r = sh("analyze " + kFig1);
  CHECK(r.code == 0);
  CHECK(r.out.find("converged") != std::string::npos);

  auto j = sh("analyze " + kFig1 + " --format json");
  REQUIRE(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc[0]["status"] == "converged");
  CHECK(doc[0]["iterations"] == 5);
  CHECK(doc[0]["sets"]["q0"].size() == 6);

  CHECK(sh("analyze " + kFig1 + " --method nonreduced").code == 2);
  CHECK(sh("analyze /nonexistent.uta").code == 2);
}

TEST_CASE("cli gen then analyze and reach") {
  const std::string u = tmp("unguarded.uta");
  REQUIRE(sh("gen -o " + u + " fig1 --unguarded").code == 0);
  auto d = sh("analyze " + u + " --explain-divergence");
  CHECK(d.code == 2);
  CHECK(d.out.find("diverged") != std::string::npos);
  CHECK(d.out.find("cycle") != std::string::npos);
  CHECK(sh("reach " + u).code == 2);
  CHECK(sh("reach " + u + " --no-simulation --timeout 5").code == 1);

  const std::string e = tmp("edf.uta");
  REQUIRE(sh("gen -o " + e + " edf --tasks 1:2,1:2,1:2 --release flower").code == 0);
  CHECK(sh("reach " + e).code == 1);
  const std::string ok = tmp("edf_ok.uta");
  REQUIRE(sh("gen -o " + ok + " edf --tasks 1:4,1:4 --release flower").code == 0);
  CHECK(sh("reach " + ok).code == 0);
  CHECK(sh("reach " + ok + " --no-simulation --timeout 1").code == 2);

  const std::string c = tmp("counter.uta");
  REQUIRE(sh("gen -o " + c + " counter --spec 'l0 +1 lt' --bound 1").code == 0);
  CHECK(sh("analyze " + c).code == 2);
  CHECK(sh("gen random --seed 3 --fragment reset-only").code == 0);
  CHECK(sh("gen edf --tasks 3:2").code == 2);
}

TEST_CASE("cli reach") {
  auto r = sh("reach " + kFig1 + " --path");
  CHECK(r.code == 1);
  CHECK(r.out.find("A.q1->q2") != std::string::npos);
  CHECK(sh("reach " + kFig1 + " --target A.q0").code == 1);
  CHECK(sh("reach " + kFig1 + " --target A.nowhere").code == 2);
  auto j = sh("reach " + kFig1 + " --format json");
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["verdict"] == "reachable");
  CHECK(doc["path"].size() == 3);
}

TEST_CASE("cli rejects bad models with a position") {
  const std::string bad = tmp("bad.uta");
  std::ofstream(bad) << "system s\nclock x\nprocess P\nlocation P a initial\nedge P a b\n";
  std::string cmd = std::string(UTA_CLI_PATH) + " analyze " + bad + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  std::array<char, 512> buf{};
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int st = pclose(p);
  CHECK(WEXITSTATUS(st) == 2);
  CHECK(out.find(":5:") != std::string::npos);
}
