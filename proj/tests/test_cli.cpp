#include <sstream>

#include "doctest.h"
#include "wct/cli.hpp"
#include "wct/json.hpp"

using namespace wct;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "wct");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream s(text);
  std::string line;
  while (std::getline(s, line))
    if (!line.empty()) out.push_back(json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("wellcovered on the paw from stdin") {
  const auto r = run({"wellcovered", "--k", "2"}, "Cj\n");
  REQUIRE(r.code == 0);
  const auto j = lines(r.out).at(0);
  CHECK(j["verdict"] == true);
  CHECK(j["min_maximal"] == 2);
  CHECK(j["max_maximal"] == 2);
  CHECK(j["labels"] == "0-based");
}

TEST_CASE("alpha of the Petersen 2-token graph") {
  const auto r = run({"alpha", "--k", "2", "--graph", "petersen"});
  REQUIRE(r.code == 0);
  const auto j = lines(r.out).at(0);
  CHECK(j["alpha"] == 16);
  CHECK(j["witness"].size() == 16);
}

TEST_CASE("search prints one result per order") {
  const auto r = run({"search", "--n", "4", "--n", "5"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0]["survivor_count"] == 3);
  CHECK(ls[1]["survivors"] == json::array({"D~{"}));
  CHECK_FALSE(ls[0].contains("elapsed"));
  CHECK(lines(run({"search", "--n", "5", "--timings"}).out).at(0).contains("elapsed"));
}

TEST_CASE("search checks the catalogue") {
  const auto r = run({"search", "--n", "6", "--verify-catalogue", WCT_DATA_DIR "/catalogue", "--audit"});
  REQUIRE(r.code == 0);
  const auto j = lines(r.out).at(0);
  CHECK(j["catalogue"]["match"] == true);
  CHECK(j["audit"]["unmatched"].empty());
}

TEST_CASE("output does not depend on the worker count") {
  const std::string input = "Cj\nCn\nC~\nD~{\nDhc\n";
  for (const char* cmd : {"alpha", "wellcovered", "bounds"}) {
    const auto a = run({cmd, "--k", "2"}, input);
    const auto b = run({cmd, "--k", "2", "--jobs", "3"}, input);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  CHECK(run({"search", "--n", "6"}).out == run({"search", "--n", "6", "--jobs", "2"}).out);
}

TEST_CASE("domain errors exit with 1 and keep going") {
  const auto r = run({"alpha", "--k", "5"}, "Cj\nD~{\n");
  CHECK(r.code == 1);
  CHECK(lines(r.out).size() == 1);
  const auto e = lines(r.err).at(0);
  CHECK(e["error"] == "invalid_argument");
  CHECK(e["input"] == "Cj");

  const auto bad = run({"alpha"}, "not graph6 at all\n");
  CHECK(bad.code == 1);
  CHECK(lines(bad.err).at(0).contains("error"));

  const auto extract = run({"design", "extract", "--k", "2", "--graph", "complete:5"});
  CHECK(extract.code == 1);
  CHECK(lines(extract.err).at(0)["error"] == "bound_not_attained");
}

TEST_CASE("usage errors exit with 2") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"alpha", "--bogus"},
           {"token"},
           {"search", "--n", "12"},
           {"alpha", "--format", "g6", "--graph", "cycle:5"},
           {"construct", "pairing", "--graph", "cycle:5"},
       }) {
    const auto r = run(args);
    CHECK(r.code == 2);
    CHECK(lines(r.err).at(0)["error"] == "usage");
  }
}

TEST_CASE("token output formats") {
  CHECK(run({"token", "--k", "2", "--graph", "cycle:4", "--format", "g6"}).out == "EilG\n");
  const auto tsv = run({"token", "--k", "2", "--graph", "path:3", "--format", "tsv"});
  CHECK(tsv.out == "1,2 1,3\n1,3 2,3\n");
  const auto j = lines(run({"token", "--k", "4", "--normalize", "--graph", "cycle:5"}).out).at(0);
  CHECK(j["k"] == 1);
  CHECK(j["order"] == 5);
}

TEST_CASE("constructions report maximality") {
  const auto r = run({"construct", "product", "--graph", "cycle:5", "--partition", R"({"parts": [[1, 3], [2, 4]]})"});
  REQUIRE(r.code == 0);
  const auto j = lines(r.out).at(0);
  CHECK(j["size"] == 4);
  CHECK(j["independent"] == true);
}

TEST_CASE("design subcommands") {
  const auto fano = lines(run({"design", "johnson", "--n", "7", "--k", "3", "--label-base", "1"}).out).at(0);
  CHECK(fano["present"] == true);
  CHECK(fano["certificate"]["blocks"].size() == 7);

  const auto back = run({"design", "verify", "--label-base", "1", "--certificate", fano["certificate"].dump()});
  CHECK(lines(back.out).at(0)["valid"] == true);

  const auto broken = run({"design", "verify", "--certificate", R"({"v":4,"k":2,"t":1,"lambda":1,"blocks":[[0,1],[1,2]]})"});
  CHECK(broken.code == 0);
  CHECK(lines(broken.out).at(0)["valid"] == false);

  const auto steiner = lines(run({"design", "steiner-check", "--n", "7", "--blocks", "[[0,1,2]]"}).out).at(0);
  CHECK(steiner["independent"] == true);
  CHECK(steiner["maximal"] == false);

  const auto c5 = lines(run({"design", "extract", "--k", "2", "--graph", "cycle:5"}).out).at(0);
  CHECK(c5["certificate"]["lambda"] == 2);
}

TEST_CASE("family subcommands") {
  const auto built = lines(run({"family", "build", "--variant", "bba", "--m", "3", "--n", "5", "--s", "1", "--t", "1"}).out).at(0);
  CHECK(built["classification"]["verdict"] == "well_covered_by_theorem");
  CHECK(built["classification"]["exact"] == true);

  const auto bad = run({"family", "build", "--variant", "bba", "--m", "2", "--n", "4", "--s", "1", "--t", "1"});
  CHECK(bad.code == 1);
  CHECK(lines(bad.err).at(0)["error"] == "precondition");

  const auto found = lines(run({"family", "detect", "--two-clique", R"({"m":2,"n":2,"cross":[[1,1]]})"}).out).at(0);
  CHECK(found["findings"].at(0)["rule"] == "equal_single_edge");

  const auto split = lines(run({"family", "classify"}, built["graph6"].get<std::string>() + "\n").out).at(0);
  CHECK_FALSE(split["splits"].empty());
}
