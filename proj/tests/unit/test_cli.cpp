#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run
{
  int code;
  std::string out;
};

auto run(const std::string & args, const std::string & env = "") -> Run
{
  auto command = env + " " + std::string(ALLIANCE_CLI) + " " + args + " 2>/dev/null";
  FILE * pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buffer{};
  while (auto n = std::fread(buffer.data(), 1, buffer.size(), pipe))
    out.append(buffer.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

auto scratch() -> fs::path
{
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("alliance-cli-test-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

auto write(const std::string & name, const std::string & text) -> std::string
{
  auto path = scratch() / name;
  std::ofstream(path) << text;
  return path.string();
}

auto read(const fs::path & path) -> std::string
{
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

} // namespace

TEST_CASE("compute")
{
  auto c5 = write("c5.g6", "Dhc\n");
  auto r = run("compute --input " + c5 + " --kind defensive");
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["value"] == 2);
  CHECK(j["kind"] == "defensive");
  CHECK(j["certified"] == true);
  CHECK(j["witness"] == json::array({0, 1}));
  CHECK(j.contains("method"));
  CHECK(j.contains("nodes_explored"));

  auto k4 = write("k4.g6", "C~\n");
  r = run("compute --input " + k4 + " --kind defensive --line");
  CHECK(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["value"] == 3);
  CHECK(j["witness_edges"].size() == 3);

  r = run("compute --input " + c5 + " --kind global-defensive --oracle");
  CHECK(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["oracle"]["agrees"] == true);
  CHECK(j["value"] == 3);
}

TEST_CASE("compute error codes")
{
  auto two = write("two_components.el", "0 1\n1 2\n3 4\n");
  CHECK(run("compute --input " + two + " --kind global-connected-defensive").code == 3);
  CHECK(run("compute --input " + two + " --kind global-defensive").code == 0);

  auto bad = write("bad.g6", "C~~~\n");
  CHECK(run("compute --input " + bad + " --kind defensive").code == 2);
  auto dup = write("dup.el", "0 1\n1 0\n");
  CHECK(run("compute --input " + dup + " --kind defensive").code == 2);
  CHECK(run("compute --input " + (scratch() / "missing.g6").string() + " --kind defensive").code == 2);
  CHECK(run("compute --input " + dup + " --kind offensive").code == 2);
  CHECK(run("").code == 2);

  auto o5 = run("generate --family odd-graph --n 5");
  REQUIRE(o5.code == 0);
  auto o5_path = write("o5.g6", o5.out);
  auto r = run("compute --input " + o5_path + " --kind strong --budget-nodes 2000");
  CHECK(r.code == 4);
  auto j = json::parse(r.out);
  CHECK(j["certified"] == false);
  CHECK(run("compute --input " + o5_path + " --kind strong", "ALLIANCE_BUDGET_NODES=2000").code == 4);
}

TEST_CASE("verify")
{
  auto r = run("verify --max-n 4");
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["summary"]["ok"] == true);
  CHECK(j["summary"]["graphs"] == 1 + 1 + 2 + 6);
  CHECK(j["violations"].empty());
  CHECK(j["graphs"][0].contains("graph6"));

  CHECK(run("verify --max-n 3 --corpus-dir " + (scratch() / "nowhere").string()).code == 2);
  CHECK(run("verify --corpus " + (scratch() / "nowhere.g6").string()).code == 2);

  r = run("verify --family odd-graph --n 5 --checks regular-corollary");
  CHECK(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["graphs"][0]["values"]["line:defensive"] == 5);
  CHECK(j["graphs"][0]["values"]["line:strong"] == 5);

  r = run("verify --star-erratum");
  CHECK(r.code == 0);
  j = json::parse(r.out);
  bool seen = false;
  for (const auto & row : j["star_erratum"])
    if (row["leaves"] == 4) {
      seen = true;
      CHECK(row["oracle_defensive"] == 2);
      CHECK(row["remark_value"] == 3);
      CHECK(row["remark_agrees"] == false);
    }
  CHECK(seen);

  auto out = scratch() / "report.json";
  CHECK(run("verify --max-n 3 --output " + out.string()).code == 0);
  CHECK(json::parse(read(out))["summary"]["ok"] == true);
}

TEST_CASE("generate, linegraph, bounds and classify")
{
  auto r = run("generate --family cycle --n 8 --format g6");
  CHECK(r.code == 0);
  CHECK(r.out == "GhCGKC\n");
  CHECK(run("generate --family cycle --n 3 --format edgelist").out == "n 3\n0 1\n0 2\n1 2\n");
  CHECK(run("generate --family wheel --n 3").code == 2);

  auto k13 = write("k13.g6", run("generate --family star --n 3").out);
  r = run("linegraph --input " + k13);
  CHECK(r.code == 0);
  CHECK(r.out == "Bw\n");
  auto map = scratch() / "k13.map.json";
  CHECK(run("linegraph --input " + k13 + " --map " + map.string()).code == 0);
  auto m = json::parse(read(map));
  CHECK(m["0"] == json::array({0, 1}));
  CHECK(m["2"] == json::array({0, 3}));

  auto k23 = write("k23.g6", run("generate --family complete-bipartite --n 2 --q 3").out);
  r = run("bounds --input " + k23);
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  std::map<std::string, json> entries;
  for (const auto & e : j["entries"])
    entries[e["id"]] = e;
  CHECK(entries["semiregular-line-exact-defensive"]["exact"] == 2);
  CHECK(entries["semiregular-line-exact-strong"]["exact"] == 3);
  CHECK(entries["regular-line-exact-defensive"]["applicable"] == false);

  auto pet = write("petersen.g6", run("generate --family petersen").out);
  j = json::parse(run("classify --input " + pet).out);
  CHECK(j["graph"]["class"] == 2);
  CHECK(j["line"]["class"] == 3);
  CHECK(j["line"]["pattern"] == "K1,3");
}
