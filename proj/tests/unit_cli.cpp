#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>

#include "stratkit/report.hpp"

using namespace stratkit;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(RunConfig cfg) {
  std::ostringstream out, err;
  const int code = runCommand(cfg, out, err);
  return {code, out.str(), err.str()};
}

RunConfig cmd(const std::string& command, const std::string& input) {
  RunConfig cfg;
  cfg.command = command;
  cfg.input = input;
  return cfg;
}

bool has(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("check passes on the straight order and fails on the reversed one") {
  const Run ok = run(cmd("check", "sl2_z0"));
  CHECK(ok.code == 0);
  CHECK(has(ok.out, "verdict: PASS"));

  const Run rev = run(cmd("check", "sl2_reversed"));
  CHECK(rev.code == 1);
  CHECK(has(rev.out, "verdict: FAIL"));
  CHECK(has(rev.out, "filtration of Af"));
}

TEST_CASE("basis lists the six normal forms") {
  const Run r = run(cmd("basis", "sl2_z0"));
  CHECK(r.code == 0);
  CHECK(has(r.out, "6 normal forms"));
  CHECK(has(r.out, "b*b"));
}

TEST_CASE("peirce prints the block dimensions") {
  const Run r = run(cmd("peirce", "sl2_z0"));
  CHECK(r.code == 0);
  CHECK(has(r.out, "e.e: dim 3"));
  CHECK(has(r.out, "f.e: dim 1"));
}

TEST_CASE("simples summarizes the radical and the simple list") {
  const Run r = run(cmd("simples", "sl2_z0"));
  CHECK(r.code == 0);
  CHECK(has(r.out, "radical: dim 4, nilpotency index 3"));
  CHECK(has(r.out, "S_e"));
  CHECK(has(r.out, "S_f"));
}

TEST_CASE("chain emits the heredity steps") {
  const Run r = run(cmd("chain", "sl2_z0"));
  CHECK(r.code == 0);
  CHECK(has(r.out, "verdict: PASS"));
  CHECK(has(r.out, "ideal dim 4"));
}

TEST_CASE("ext prints frozen rows for chosen labels") {
  RunConfig cfg = cmd("ext", "sl2_z0");
  cfg.fromLabel = "S_e";
  cfg.toLabel = "S_f";
  cfg.bound = 6;
  const Run r = run(cfg);
  CHECK(r.code == 0);
  CHECK(has(r.out, "Ext^n(S_e, S_f) for n = 0..6: 0 1 1 1 1 1 1"));

  cfg.fromLabel = "S_q";
  CHECK(run(cfg).code == 2);  // unknown label is a usage error
}

TEST_CASE("certify emits the fixed JSON shape") {
  RunConfig cfg = cmd("certify", "sl2_z0");
  cfg.segment = {"e"};
  cfg.segmentGiven = true;
  cfg.bound = 6;
  cfg.json = true;
  const Run r = run(cfg);
  CHECK(r.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["verdict"] == "PASS");
  CHECK(doc["config"]["command"] == "certify");
  REQUIRE(doc["certificates"].size() == 1);
  const nlohmann::json& j = doc["certificates"][0];
  for (const char* key : {"segment", "bound", "flat_dim", "unit", "counit",
                          "fullness", "verdict"})
    CHECK(j.contains(key));
  CHECK(j["verdict"] == "PASS");
  CHECK(j["flat_dim"] == "1");
  CHECK(j["bound"] == 6);
  CHECK(j["segment"] == nlohmann::json::array({"e"}));
  REQUIRE(j["fullness"].size() == 1);
  CHECK(j["fullness"][0]["ext_b"] == j["fullness"][0]["ext_a"]);
}

TEST_CASE("segments widen to their down-closure with a note on stderr") {
  RunConfig cfg = cmd("certify", "sl2_z0");
  cfg.segment = {"f"};
  cfg.segmentGiven = true;
  const Run r = run(cfg);
  CHECK(r.code == 0);
  CHECK(has(r.err, "closed downward"));
}

TEST_CASE("outputs are byte-deterministic across repeated runs") {
  for (const std::string command : {"report", "certify", "ext"}) {
    RunConfig cfg = cmd(command, "sl2_z0");
    cfg.json = command != "report";
    const Run first = run(cfg);
    const Run second = run(cfg);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("report walks every initial segment") {
  const Run r = run(cmd("report", "sl2_z1"));
  CHECK(r.code == 0);
  CHECK(has(r.out, "verdict: PASS"));
  const Run rev = run(cmd("report", "sl2_reversed"));
  CHECK(rev.code == 1);
}

TEST_CASE("errors land on exit code 2 with a diagnostic") {
  const Run unknown = run(cmd("frobnicate", "sl2_z0"));
  CHECK(unknown.code == 2);
  CHECK_FALSE(unknown.err.empty());

  const Run missing = run(cmd("check", "no_such_file"));
  CHECK(missing.code == 2);

  RunConfig cfg = cmd("certify", "sl2_z0");
  cfg.segment = {"q"};
  cfg.segmentGiven = true;
  CHECK(run(cfg).code == 2);
}

TEST_CASE("parameter overrides flow through the pipeline") {
  RunConfig cfg = cmd("simples", "sl2_z0");
  cfg.params = {{"z", "1"}};
  const Run r = run(cfg);
  CHECK(r.code == 0);
  CHECK(has(r.out, "radical: dim 0"));  // z = 1 is semisimple
}
