#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gqt/cli.hpp"
#include "gqt/graph6.hpp"

using namespace gqt;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--json-out");
  args.push_back("-");
  const Run r = run(args);
  return json::parse(r.out);
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("gqt_cli_test_" + name)).string();
}

}  // namespace

TEST_CASE("cli: t-vertex condition runs") {
  CHECK(run({"check-tvc", "--construct", "w2", "--t", "5"}).code == 0);
  CHECK(run({"check-tvc", "--construct", "q5_2", "--t", "7", "--mode", "reduced"}).code == 0);
  const Run c6 = run({"check-tvc", "--construct", "w2", "--t", "4", "--mode", "reduced", "--k", "3"});
  CHECK(c6.code == 3);
}

TEST_CASE("cli: K4,4 census on the dual flock quadrangle" * doctest::timeout(900)) {
  const json j = run_json({"k44-census", "--construct", "payne", "--dual"});
  CHECK(j["exit_code"] == 1);
  CHECK(j["result"]["status"] == "violated");
  CHECK(j["result"]["distinct_values"].get<int>() >= 2);
  CHECK(j["result"]["differing"].size() == 2);
}

TEST_CASE("cli: reports") {
  const json srg = run_json({"check-srg", "--construct", "t2star", "--dual"});
  CHECK(srg["result"]["parameters"] == json{{"v", 96}, {"k", 20}, {"lambda", 4}, {"mu", 4}});
  CHECK(srg["input"]["parameters"]["family"] == "T2*(O)");
  CHECK(srg["input"]["parameters"]["field_modulus"] == "[1,1,1]");

  const json iso = run_json({"check-isoregular", "--construct", "w2", "--k", "3"});
  CHECK(iso["exit_code"] == 1);
  CHECK(iso["result"]["witness"]["first"].size() == 3);

  const json tvc = run_json({"check-tvc", "--construct", "q5_2", "--t", "6", "--mode", "reduced", "--k", "3"});
  CHECK(tvc["result"]["status"] == "satisfied");
  CHECK(tvc["result"]["mode"] == "reduced(3)");

  const json vf = run_json({"verify-formula", "--gq", "q5_3", "--formula", "completeS/11s/3"});
  CHECK(vf["result"]["expected_non_edge"] == 240);
  CHECK(vf["exit_code"] == 0);

  const json ct = run_json({"count-type", "--construct", "q5_3", "--formula", "type3a"});
  CHECK(ct["result"]["constant"] == true);
  CHECK(ct["result"]["classes"]["edges"]["histogram"][0]["count"] == 9);

  const Run fd = run({"find-distinguisher", "--construct", "w2", "--t", "6", "--k", "2"});
  CHECK(fd.code == 0);

  const Run cons = run({"construct", "--construct", "q5_2"});
  CHECK(cons.code == 0);
  CHECK(cons.out.find("order (2,4)") != std::string::npos);
}

TEST_CASE("cli: reports are deterministic and thread-independent") {
  const Run a = run({"check-tvc", "--construct", "w3", "--t", "4", "--json-out", "-"});
  const Run b = run({"check-tvc", "--construct", "w3", "--t", "4", "--json-out", "-"});
  CHECK(a.out == b.out);
  const json one = run_json({"check-tvc", "--construct", "w3", "--t", "4", "--threads", "1"});
  const json four = run_json({"check-tvc", "--construct", "w3", "--t", "4", "--threads", "4"});
  CHECK(one["result"] == four["result"]);
  CHECK(one["config"]["threads"] == 1);
}

TEST_CASE("cli: graph6 input and export") {
  const std::string path = temp_path("c6.g6");
  {
    std::ofstream f(path);
    write_graph6(f, cycle_graph(6));
  }
  const Run c6 = run({"check-tvc", "--graph6", path, "--t", "3"});
  CHECK(c6.code == 1);
  CHECK(run({"check-srg", "--graph6", path}).code == 1);

  const std::string out = temp_path("w2.g6");
  CHECK(run({"export-graph6", "--construct", "w2", "--out", out}).code == 0);
  CHECK(run({"check-srg", "--graph6", out}).code == 0);
  const Run exported = run({"export-graph6", "--construct", "w2"});
  std::ifstream f(out);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(exported.out == buf.str());

  const std::string bad = temp_path("bad.g6");
  {
    std::ofstream g(bad);
    g << "D~~~\n";
  }
  CHECK(run({"check-srg", "--graph6", bad}).code == 3);
  CHECK(run({"check-srg", "--graph6", temp_path("missing.g6")}).code == 3);
  std::remove(path.c_str());
  std::remove(out.c_str());
  std::remove(bad.c_str());
}

TEST_CASE("cli: usage errors exit 3") {
  CHECK(run({}).code == 3);
  CHECK(run({"frobnicate"}).code == 3);
  CHECK(run({"check-tvc", "--construct", "w2"}).code == 3);
  CHECK(run({"check-tvc", "--t", "4"}).code == 3);
  CHECK(run({"check-tvc", "--construct", "nope", "--t", "4"}).code == 3);
  CHECK(run({"check-tvc", "--construct", "w2", "--graph6", "x", "--t", "4"}).code == 3);
  CHECK(run({"check-tvc", "--construct", "w2", "--t", "4", "--budget-seconds", "0"}).code == 3);
  CHECK(run({"check-tvc", "--construct", "w2", "--t", "8"}).code == 3);
  CHECK(run({"verify-formula", "--gq", "w3", "--formula", "completeS/FF/3"}).code == 3);
  CHECK(run({"verify-formula", "--gq", "w3", "--formula", "nonsense"}).code == 3);
  CHECK(run({"count-type", "--construct", "w2"}).code == 3);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli: budget exhaustion exits 2") {
  const Run r = run({"check-tvc", "--construct", "q5_3", "--t", "7", "--budget-seconds", "0.001"});
  CHECK(r.code == 2);
  CHECK(r.out.find("inconclusive") != std::string::npos);
}
