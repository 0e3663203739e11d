#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::string env(const char* name) {
  const char* v = std::getenv(name);
  REQUIRE(v != nullptr);
  return v;
}

Run run(const std::string& args) {
  std::string cmd = "'" + env("CRITICALIS_BIN") + "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& file) { return "'" + env("CRITICALIS_DATA") + "/" + file + "'"; }

}  // namespace

TEST_CASE("corank prints gamma", "[cli]") {
  auto r = run("corank builtin:path3");
  CHECK(r.code == 0);
  CHECK(r.out.find("gamma=2") != std::string::npos);
  CHECK(run("corank " + data("fig2.edgelist")).out.find("gamma=3") != std::string::npos);
  CHECK(run("corank g6:C~").out.find("gamma=1") != std::string::npos);
  CHECK(run("corank family:cycle:5").code == 0);
}

TEST_CASE("json output carries the record fields", "[cli]") {
  auto r = run("--format json ideal builtin:path3 3");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["graph"] == "builtin:path3");
  CHECK(j["ring"] == "Z");
  CHECK(j["index"] == 3);
  CHECK(j["trivial"] == false);
  CHECK(j["timing_ms"] == 0);
  REQUIRE(j["generators"].size() == 1);
  CHECK(j["generators"][0] == "x1*x2*x3 - x1 - x3");
}

TEST_CASE("ring option and twin vectors", "[cli]") {
  auto z = run("corank builtin:path3 --twin v1:-1,v2:1,v3:-1 --check");
  CHECK(z.code == 0);
  CHECK(z.out.find("gamma=2") != std::string::npos);
  auto z3 = run("--ring Z/3 corank builtin:path3 --twin v1:-1,v2:1,v3:-1 --check");
  CHECK(z3.out.find("gamma=3") != std::string::npos);
}

TEST_CASE("ideal evaluation", "[cli]") {
  auto r = run("--format json ideal builtin:fig2 4 --eval v1=0");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["trivial"] == false);
  CHECK(!j["generators"].empty());
}

TEST_CASE("blowup output parses back", "[cli]") {
  auto r = run("blowup builtin:path3 --twin v2:2");
  REQUIRE(r.code == 0);
  auto dir = std::filesystem::temp_directory_path() / "criticalis_cli_test";
  std::filesystem::create_directories(dir);
  auto file = dir / "blowup.edgelist";
  std::ofstream(file) << r.out;
  CHECK(run("corank '" + file.string() + "'").out.find("gamma=2") != std::string::npos);
}

TEST_CASE("exit codes", "[cli]") {
  CHECK(run("corank builtin:nope").code == 2);
  CHECK(run("corank").code == 2);
  CHECK(run("--ring Z/4 corank builtin:path3").code == 2);
  CHECK(run("ideal builtin:path3 0").code == 2);
  CHECK(run("--no-certificates --max-pairs 1 ideal builtin:fig2 4").code == 3);
  CHECK(run("scan twinfree-bound --input " + data("malformed.g6")).code == 0);
  CHECK(run("closed complete 4 3 --compare").code == 0);
}

TEST_CASE("budget from the environment, flags win", "[cli]") {
  CHECK(run("--no-certificates ideal builtin:fig2 4").code == 0);
  CHECK(std::system(("CRITICALIS_MAX_PAIRS=1 '" + env("CRITICALIS_BIN") +
                     "' --no-certificates ideal builtin:fig2 4 >/dev/null 2>&1")
                        .c_str()) != 0);
  CHECK(std::system(("CRITICALIS_MAX_PAIRS=1 '" + env("CRITICALIS_BIN") +
                     "' --no-certificates --max-pairs 100000 ideal builtin:fig2 4 >/dev/null 2>&1")
                        .c_str()) == 0);
}

TEST_CASE("config file supplies defaults", "[cli]") {
  CHECK(run("--config " + data("budget.toml") + " --no-certificates ideal builtin:fig2 4").code == 3);
  auto r = run("--config " + data("budget.toml") + " corank builtin:path3");
  CHECK(r.out.find("\"gamma\":2") != std::string::npos);
}

TEST_CASE("scan reports and resumes", "[cli]") {
  auto dir = std::filesystem::temp_directory_path() / "criticalis_cli_test";
  std::filesystem::create_directories(dir);
  auto out = dir / "scan.jsonl";
  std::filesystem::remove(out);
  auto first = run("scan twinfree-bound --input " + data("twinfree6.g6") + " --output '" + out.string() + "'");
  CHECK(first.code == 0);
  CHECK(first.out.find("violations=0") != std::string::npos);
  auto again = run("scan twinfree-bound --input " + data("twinfree6.g6") + " --output '" + out.string() + "'");
  CHECK(again.out.find("records=0 resumed=31") != std::string::npos);
  std::ofstream bad(dir / "bad.g6");
  bad << "!!\n";
  bad.close();
  CHECK(run("scan tree-bound --input '" + (dir / "bad.g6").string() + "'").code == 4);
  CHECK(run("scan nonsense --input " + data("twinfree6.g6")).code == 2);
}

TEST_CASE("trees scan against the tree bound", "[cli]") {
  auto r = run("scan tree-bound --input " + data("trees9.g6"));
  CHECK(r.code == 0);
  CHECK(r.out.find("violations=0") != std::string::npos);
}

TEST_CASE("cotree and graph listing", "[cli]") {
  auto r = run("cotree builtin:fig8 --gamma");
  CHECK(r.code == 0);
  CHECK(r.out.find("gamma=3") != std::string::npos);
  CHECK(run("cotree family:path:4").code == 1);
  auto g = run("graphs 4 --connected");
  CHECK(std::count(g.out.begin(), g.out.end(), '\n') == 6);
}

TEST_CASE("twin command", "[cli]") {
  auto r = run("--format json twin builtin:fig7 --vertex v1 --kind rep --mode stabilized --k 1 --i 0");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["index"] == 4);
  CHECK(j["constants"]["lambda"] == 1);
  CHECK(run("twin builtin:complete3 --vertex v1").code == 2);
  CHECK(run("twin family:complete:3 --vertex v1 --mode stabilized").code == 2);
}

TEST_CASE("verify runs a named suite", "[cli]") {
  auto r = run("verify joindet");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS joindet") != std::string::npos);
  CHECK(run("verify nosuch").code == 2);
}
