#include "doctest.h"
#include "json.hpp"
#include "strongconv/cli/cli.hpp"
#include "strongconv/errors.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

using strongconv::cli::run_command;
using Json = nlohmann::ordered_json;

namespace {

const std::string kData = STRONGCONV_TEST_DATA;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return Run{code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("homology of the triangle boundary") {
  const Run r = run({"homology", "--in", data("triangle_boundary.json")});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["command"] == "homology");
  CHECK(j["result"] == Json::parse(R"({"betti":{"1":1}})"));
  CHECK(j["input_digest"].get<std::string>().size() == 16);
  CHECK(j.contains("seed"));
  CHECK(j["config"].contains("transversal_cap"));
  CHECK_FALSE(j.contains("timing"));
}

TEST_CASE("input errors exit with 1") {
  Run r = run({"homology", "--in", data("malformed.json")});
  CHECK(r.code == 1);
  CHECK(r.err.find("malformed JSON at byte") != std::string::npos);
  CHECK(r.out.empty());

  CHECK(run({"homology", "--in", data("missing.json")}).code == 1);
  CHECK(run({"no-such-command"}).code == 1);
  CHECK(run({"homology"}).code == 1);
  CHECK(run({"homology", "--in", data("triangle_boundary.json"), "--bogus"}).code == 1);
  CHECK(run({"hull", "--body", data("square.json"), "--points", data("triangle_boundary.json")}).code == 1);
  // query of the wrong dimension
  CHECK(run({"cara-number", "--body", "named:square", "--points", data("points_a.json"), "--query", "1/2"}).code == 1);
  CHECK(run({"counterexample", "verify", "--n", "3", "--delta", "10"}).code == 1);
  CHECK(run({"homology", "--in", data("triangle_boundary.json"), "--transversal-cap", "0"}).code == 1);
}

TEST_CASE("colorful report names the separated class") {
  const Run r = run({"colorful", "--body", data("triangle.json"), "--points", data("triangle_instance.json")});
  REQUIRE(r.code == 0);
  const Json res = Json::parse(r.out)["result"];
  CHECK(res["hypothesis_holds"] == true);
  CHECK(res["separated_color"] == 0);
  CHECK(res["verified"] == true);
  CHECK(res["theorem_violated"] == false);
}

TEST_CASE("reports are byte-identical across reruns and worker counts") {
  const std::vector<std::string> cmd{"colorful", "--body", data("triangle.json"), "--points", data("triangle_instance.json")};
  const Run a = run(cmd);
  const Run b = run(cmd);
  CHECK(a.out == b.out);
  auto more = cmd;
  more.insert(more.end(), {"--jobs", "3"});
  CHECK(run(more).out == a.out);

  const Run g1 = run({"generating", "--body", "named:hexagon", "--samples", "6", "--seed", "5"});
  const Run g2 = run({"generating", "--body", "named:hexagon", "--samples", "6", "--seed", "5"});
  REQUIRE(g1.code == 0);
  CHECK(g1.out == g2.out);
  CHECK(Json::parse(g1.out)["result"]["all_passed"] == true);
}

TEST_CASE("seed precedence: defaults, config file, environment, flag") {
  const std::string cfg = "/tmp/strongconv_test_config.txt";
  {
    std::ofstream f(cfg);
    f << "# test\nseed = 11\nsubset_cap = 77\n";
  }
  auto seed_of = [](const Run& r) { return Json::parse(r.out)["seed"].get<std::uint64_t>(); };
  const std::vector<std::string> base{"homology", "--in", data("triangle_boundary.json")};
  ::unsetenv("STRONGCONV_SEED");
  CHECK(seed_of(run(base)) == 1);
  auto with_cfg = base;
  with_cfg.insert(with_cfg.end(), {"--config", cfg});
  const Run c = run(with_cfg);
  CHECK(seed_of(c) == 11);
  CHECK(Json::parse(c.out)["config"]["subset_cap"] == 77);
  ::setenv("STRONGCONV_SEED", "23", 1);
  CHECK(seed_of(run(with_cfg)) == 23);
  auto with_flag = with_cfg;
  with_flag.insert(with_flag.end(), {"--seed", "42"});
  CHECK(seed_of(run(with_flag)) == 42);
  ::setenv("STRONGCONV_SEED", "x", 1);
  CHECK(run(base).code == 1);
  ::unsetenv("STRONGCONV_SEED");

  {
    std::ofstream f(cfg);
    f << "colour = blue\n";
  }
  CHECK(run(with_cfg).code == 1);
}

TEST_CASE("config text parsing") {
  strongconv::cli::RunConfig c;
  strongconv::cli::apply_config_text(c, "raster_resolution=50\n\n  jobs = 2 # two\n", "x");
  CHECK(c.raster_resolution == 50);
  CHECK(c.jobs == 2);
  CHECK_THROWS_AS(strongconv::cli::apply_config_text(c, "jobs\n", "x"), strongconv::InputError);
  CHECK_THROWS_AS(strongconv::cli::apply_config_text(c, "jobs = -1\n", "x"), strongconv::InputError);
  CHECK(strongconv::cli::fnv1a_hex("") == "cbf29ce484222325");
  CHECK(strongconv::cli::fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("input digest follows the input bytes") {
  const Json a = Json::parse(run({"homology", "--in", data("triangle_boundary.json")}).out);
  const Json b = Json::parse(run({"homology", "--in", data("circle_partitioned.json")}).out);
  CHECK(a["input_digest"] != b["input_digest"]);
  CHECK(a["result"] == b["result"]);
}

TEST_CASE("single square renders as one closed path") {
  const std::string svg = "/tmp/strongconv_square.svg";
  const Run r = run({"plot", "--scene", data("square_scene.json"), "--svg", svg});
  REQUIRE(r.code == 0);
  const std::string s = slurp(svg);
  CHECK(count(s, "<path") == 1);
  CHECK(count(s, " M ") + count(s, "\"M ") == 1);
  CHECK(count(s, " L ") == 3);
  CHECK(count(s, " Z") == 1);
  CHECK(count(s, "<circle") == 0);
  CHECK(run({"plot", "--scene", data("square_scene.json"), "--svg", svg}).out == r.out);
  CHECK(slurp(svg) == s);
}

TEST_CASE("spindle scene draws body, points and hull") {
  const std::string svg = "/tmp/strongconv_spindle.svg";
  REQUIRE(run({"plot", "--scene", data("spindle_scene.json"), "--svg", svg}).code == 0);
  const std::string s = slurp(svg);
  CHECK(count(s, "<path class=\"body\"") == 1);
  CHECK(count(s, "<path class=\"hull\"") == 1);
  CHECK(count(s, "<circle class=\"point\"") == 2);
}

TEST_CASE("3D scenes need a section") {
  const std::string scene = "/tmp/strongconv_cube_scene.json";
  {
    std::ofstream f(scene);
    f << R"({"bodies": [{"dim": 3, "vertices": [[0,0,0],[1,0,0],[0,1,0],[1,1,0],[0,0,1],[1,0,1],[0,1,1],[1,1,1]]}],)"
      << R"( "points": [["1/2", "1/2", "1/2"]]})";
  }
  const Run bad = run({"plot", "--scene", scene, "--svg", "/tmp/strongconv_cube.svg"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("section") != std::string::npos);
  REQUIRE(run({"plot", "--scene", scene, "--svg", "/tmp/strongconv_cube.svg", "--section", "1/2"}).code == 0);
  const std::string s = slurp("/tmp/strongconv_cube.svg");
  CHECK(count(s, "<path") == 1);
  CHECK(count(s, " L ") == 3);
  CHECK(count(s, "<circle") == 1);
}

TEST_CASE("counterexample section figure") {
  const std::string svg = "/tmp/strongconv_section.svg";
  const Run r = run({"counterexample", "build", "--n", "2", "--svg", svg, "--section", "1/2"});
  REQUIRE(r.code == 0);
  const std::string s = slurp(svg);
  CHECK(count(s, "<path class=\"body\"") == 1);
  CHECK(count(s, "<circle class=\"point\"") == 4);
  CHECK(count(s, "<circle class=\"origin\"") == 1);
  CHECK(Json::parse(r.out)["result"]["svg"]["section"] == "1/2");
}

TEST_CASE("counterexample verify through the command line") {
  const Run r = run({"counterexample", "verify", "--n", "2"});
  REQUIRE(r.code == 0);
  const Json res = Json::parse(r.out)["result"];
  CHECK(res["report"]["passed"] == true);
  CHECK(res["report"]["caratheodory_number"] == 4);
  CHECK(res["instance"]["n"] == 2);
  CHECK_FALSE(res["instance"].contains("sections"));
}

TEST_CASE("complex commands") {
  Json r = Json::parse(run({"dual", "--in", data("triangle_boundary.json")}).out)["result"];
  // only the empty face survives: V minus S is a face of the boundary unless S is empty
  CHECK(r["homology"] == Json::parse(R"({"betti":{"-1":1}})"));
  r = Json::parse(run({"link", "--in", data("triangle_boundary.json"), "--simplex", "a"}).out)["result"];
  CHECK(r["homology"] == Json::parse(R"({"betti":{"0":1}})"));
  r = Json::parse(run({"join", "--a", data("triangle_boundary.json"), "--b", data("triangle_boundary.json")}).out)["result"];
  CHECK(r["homology"] == Json::parse(R"({"betti":{"3":1}})"));
  CHECK(run({"link", "--in", data("triangle_boundary.json"), "--simplex", "z"}).code == 1);

  r = Json::parse(run({"meshulam", "--in", data("circle_partitioned.json")}).out)["result"];
  CHECK(r["hypothesis_holds"] == true);
  CHECK(r["theorem_violated"] == false);
  const Run p = run({"prop34", "--in", data("circle_partitioned.json"), "--n", "1"});
  CHECK(p.code == 0);
  CHECK(Json::parse(p.out)["result"]["all_hold"] == false);
}

TEST_CASE("nerve commands") {
  const std::string fam = "/tmp/strongconv_family.json";
  {
    std::ofstream f(fam);
    f << R"([{"dim":2,"vertices":[[0,0],[2,0],[2,2],[0,2]]},{"dim":2,"vertices":[[1,0],[3,0],[3,2],[1,2]]},)"
      << R"({"dim":2,"vertices":[[0,1],[2,1],[2,3],[0,3]]},{"dim":2,"vertices":[[5,5],[6,5],[6,6]]}])";
  }
  const Json r = Json::parse(run({"nerve", "--bodies", fam}).out)["result"];
  // a triangle of three overlapping squares plus an isolated vertex
  CHECK(r["homology"] == Json::parse(R"({"betti":{"0":1}})"));
  CHECK(r["complex"]["facets"].size() == 2);
  const Json t = Json::parse(run({"nerve", "--body", "named:square", "--points", data("points_a.json")}).out)["result"];
  CHECK(t["complex"]["facets"].size() == 1);
  CHECK(run({"nerve", "--body", "named:square"}).code == 1);
}

TEST_CASE("probe commands") {
  const Run a = run({"acyclic-probe", "--random", "3", "--resolution", "60", "--seed", "4"});
  REQUIRE(a.code == 0);
  const Json ar = Json::parse(a.out)["result"];
  CHECK(ar["counts"]["other"] == 0);
  CHECK(ar["profiles"].size() == 3);
  CHECK(run({"acyclic-probe", "--random", "3", "--resolution", "60", "--seed", "4", "--jobs", "2"}).out == a.out);

  const Run s = run({"summand-probe", "--random", "2", "--steps", "3", "--resolution", "40"});
  REQUIRE(s.code == 0);
  const Json sr = Json::parse(s.out)["result"];
  CHECK(sr["inconsistent"] == 0);
  for (const auto& row : sr["results"]) CHECK(row["is_summand"] == true);
}
