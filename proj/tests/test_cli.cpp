#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "tmcg/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = tmcg::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("intersect") {
  const Run r = run({"intersect", "--n", "3", "apply(H1, B1)", "B1"});
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");
  CHECK(run({"intersect", "--n", "3", "B1", "B1"}).out == "0\n");
  CHECK(run({"intersect", "--n", "4", "apply(H1, B1)", "G1[0]", "--max-iterations", "50"}).out == "3\n");
}

TEST_CASE("equal") {
  const Run r = run({"equal", "--n", "3", "H1 T1 H1 T1^-1", "T3 T1^-2 T2"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
  CHECK(run({"equal", "--n", "3", "H1 H2", "H2 H1"}).out == "false\n");
}

TEST_CASE("act, hom, lattice, kernel") {
  const Run a = run({"act", "--n", "3", "H1", "B1"});
  CHECK(a.code == 0);
  CHECK(a.out.find("profile: A=1 B1=2 B2=0 B3=0 G1[-1]=1 G2[-1]=1 G3[-1]=1") != std::string::npos);
  CHECK(run({"hom", "--n", "4", "PsiOx(1)", "OG(1,0)"}).out == "3\n");
  CHECK(run({"hom", "--n", "4", "OY", "Ox(1)"}).code == 1);
  CHECK(run({"lattice", "--n", "3"}).out == "kernel: (1, 1, 1)\n");
  CHECK(run({"lattice", "1,-2,1,0"}).out == "multidegree: (1, -2, 1, 0)\nin lattice: true\n");
  CHECK(run({"lattice", "--n", "4", "x1"}).out == "multidegree: (1, 0, 0, 0)\nin lattice: false\n");
  CHECK(run({"kernel", "--fibers", "3,4", "Y1 Y2^-1"}).code == 0);
  CHECK(run({"kernel", "--fibers", "3,4", "Y1"}).out == "true\n");
  CHECK(run({"kernel", "--fibers", "3,4", "g2.1[0] g2.1[-1]"}).out == "false\n");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"equal", "--n", "3", "T1 X", "T1"}).code == 2);
  CHECK(run({"equal", "--n", "3", "T1 X", "T1"}).err.find("token 2") != std::string::npos);
  CHECK(run({"equal", "T1", "T1"}).code == 2);
  CHECK(run({"equal", "--n", "1", "T1", "T1"}).code == 2);
  CHECK(run({"intersect", "--n", "3", "B1"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  CHECK(run({"kernel", "--fibers", "3,1", "Y1"}).code == 2);
}

TEST_CASE("verify emits a sorted JSON report") {
  const Run r = run({"verify", "--n", "4", "--suite", "all", "--json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["suite"] == "all");
  CHECK(doc["summary"]["fail"] == 0);
  CHECK(doc["summary"]["skip"] == 0);
  CHECK(doc["summary"]["pass"] == doc["entries"].size());
  std::string prev;
  for (const auto& e : doc["entries"]) {
    for (const char* key : {"name", "status", "expected", "actual", "paper_anchor"}) CHECK(e.contains(key));
    CHECK(e["status"] == "pass");
    CHECK(!e["paper_anchor"].get<std::string>().empty());
    CHECK(prev <= e["name"].get<std::string>());
    prev = e["name"];
  }
  // Every suite contributes.
  for (const std::string s : {"relations/", "dictionary/", "lattice/", "kernel/", "properties/"}) {
    bool seen = false;
    for (const auto& e : doc["entries"]) seen = seen || e["name"].get<std::string>().rfind(s, 0) == 0;
    CHECK(seen);
  }
}

TEST_CASE("output is deterministic") {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {"verify", "--suite", "dictionary", "--json"},
           {"verify", "--suite", "kernel", "--fibers", "2,3"},
           {"act", "--n", "4", "H2[1] TY", "G3[0]"}}) {
    const Run a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
