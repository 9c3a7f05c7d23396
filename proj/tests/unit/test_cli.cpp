#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "subfac/cli/cli.hpp"
#include "subfac/errors.hpp"
#include "subfac/verify/serialize.hpp"

using namespace subfac;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("subfac_cli_" + name)).string();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("sthom on k[x]/x^3") {
  auto r = run({"sthom", "M1", "M2", "--algebra", "nak1_3.json", "--json"});
  REQUIRE(r.code == 0);
  auto j = r.report();
  CHECK(j["result"]["dim"] == 1);
  CHECK(j["verdicts"].empty());
  CHECK(j["tool_version"] == cli::kToolVersion);
  CHECK(j["config"]["seed"] == 1);
}

TEST_CASE("ambient verification exits 0") {
  auto r = run({"verify", "--a", "full", "--x", "zero", "--algebra", "nak1_3.json"});
  CHECK(r.code == cli::kAllPass);
  CHECK(r.out.find("rTR4") != std::string::npos);
}

TEST_CASE("left axioms and axiom selection") {
  auto r = run({"verify", "--a", "full", "--x", "M1", "--algebra", "nak1_3.json", "--left",
                "--axioms", "rtr0,RTR2", "--json"});
  REQUIRE(r.code == 0);
  std::vector<std::string> names;
  const json j = r.report();
  for (const auto& v : j["verdicts"]) names.push_back(v["check"].get<std::string>());
  CHECK(names == std::vector<std::string>{"rTR0", "rTR2", "lTR0", "lTR2"});
  CHECK(run({"verify", "--a", "full", "--algebra", "nak1_3.json", "--axioms", "rtr9"}).code ==
        cli::kInvalidInput);
}

TEST_CASE("classify k[x]/x^3") {
  auto r = run({"classify", "--algebra", "nak1_3.json", "--mode", "exhaustive", "--json"});
  REQUIRE(r.code == 0);
  bool found = false;
  const json j = r.report();
  for (const auto& row : j["result"]["rows"]) {
    if (row["a"] == "T" && row["x"] == "add(M1)") {
      found = true;
      CHECK(row["right_triangulated"] == true);
      CHECK(row["rigid"] == false);
    }
  }
  CHECK(found);
}

TEST_CASE("invalid input exits 2 with a pointer") {
  const std::string p = tmp("bad.json");
  write(p, R"({"field": {"kind": "prime", "p": 4}, "presets": {"serial": {"n": 1, "L": 3}}})");
  auto r = run({"catalog", "--algebra", p});
  CHECK(r.code == cli::kInvalidInput);
  CHECK(r.err.find("/field/p") != std::string::npos);
  write(p, R"({"field": {"kind": "prime", "p": 2}, "quiver": {"vertices": ["1"],
      "arrows": [{"from": "1", "to": "2", "label": "x"}]}})");
  r = run({"catalog", "--algebra", p});
  CHECK(r.code == cli::kInvalidInput);
  CHECK(r.err.find("/quiver/arrows/0/to") != std::string::npos);
  write(p, R"({"field": {"kind": "prime", "p": 2}, "presets": {"serial": {"n": 1, "L": 3}},
      "quiver": {"vertices": ["1"]}})");
  CHECK(run({"catalog", "--algebra", p}).code == cli::kInvalidInput);
  CHECK(run({"sthom", "M1", "M7", "--algebra", "nak1_3.json"}).code == cli::kInvalidInput);
  CHECK(run({"verify", "--a", "full", "--algebra", "nak1_3_q.json"}).code == cli::kInvalidInput);
  CHECK(run({"nonsense"}).code == cli::kInvalidInput);
  // X not inside A is a hypothesis violation.
  CHECK(run({"verify", "--a", "S1", "--x", "S2", "--algebra", "nak3_2.json"}).code ==
        cli::kInvalidInput);
}

TEST_CASE("sampled runs over Q are inconclusive") {
  auto r = run({"verify", "--a", "full", "--x", "zero", "--algebra", "nak1_3_q.json", "--mode",
                "sampled", "--samples", "2", "--bounds", "4,1"});
  CHECK(r.code == cli::kInconclusive);
}

TEST_CASE("object and subcategory expressions") {
  auto alg = MonomialAlgebra::nakayama(2, 3, Field::prime(2));
  Workbench wb(alg);
  CHECK(cli::parse_object(wb, "interval(1,2)")->name() == "M(1,2)");
  CHECK(cli::parse_object(wb, "simple(2)")->dims() == std::vector<std::size_t>{0, 1});
  CHECK(cli::parse_object(wb, "projective(1)")->total_dim() == 3);
  CHECK(cli::parse_object(wb, "zero")->is_zero());
  CHECK(cli::parse_object(wb, "S1+M(2,2)")->total_dim() == 3);
  auto block = to_json(wb.catalog()[2]).dump();
  CHECK(cli::parse_object(wb, block)->key() == wb.catalog()[2]->key());
  CHECK_THROWS_AS(cli::parse_object(wb, "interval(3,1)"), InputError);
  CHECK(cli::parse_subcat(wb, "full").generators.size() == 4);
  CHECK(cli::parse_subcat(wb, "zero").generators.empty());
  auto s = cli::parse_subcat(wb, "S1, interval(2,2)");
  CHECK(s.name == "add(S1,M(2,2))");
  CHECK(cli::parse_subcat(wb, R"x(["S1", "simple(2)"])x").generators.size() == 2);
  CHECK(cli::parse_subcat(wb, "add(S1,S2)").name == "add(S1,S2)");
  CHECK(cli::parse_object(wb, "2S1")->dims() == std::vector<std::size_t>{2, 0});
  CHECK(cli::parse_object(wb, "shift(S1,-1)")->name() == "shift(S1,-1)");
}

TEST_CASE("explicit quivers with a supplied catalog") {
  auto r = run({"mutation", "--a", "full", "--x", "simple(1)", "--algebra", "nak3_2_explicit.json",
                "--json"});
  CHECK(r.code == cli::kCounterexample);
  CHECK(r.report().contains("assumptions"));
}

TEST_CASE("schema round trip") {
  std::ifstream in(std::string(SUBFAC_DATA_DIR) + "/nak3_2_explicit.json");
  json doc = json::parse(in);
  auto la = cli::load_algebra(doc);
  Workbench wb(la.algebra);
  for (const auto& e : la.catalog) {
    Obj m = cli::parse_object_json(wb, e);
    json j = to_json(m);
    CHECK(to_json(obj_from_json(wb.algebra(), j)) == j);
  }
}

TEST_CASE("counterexamples replay from the report") {
  const std::string rep = tmp("report.json");
  auto r = run({"mutation", "--a", "S1,S2", "--x", "S1", "--algebra", "nak3_2.json", "--report", rep});
  REQUIRE(r.code == cli::kCounterexample);
  auto p = run({"replay", rep, "--algebra", "nak3_2.json", "--json"});
  CHECK(p.code == cli::kCounterexample);
  CHECK(p.report()["result"][0]["reproduced"] == true);

  auto m = run({"verify", "--a", "full", "--x", "M1", "--algebra", "nak1_3.json", "--axioms", "rtr3",
                "--mutate", "drop-correction", "--report", rep});
  REQUIRE(m.code == cli::kCounterexample);
  auto q = run({"replay", rep, "--algebra", "nak1_3.json", "--json"});
  CHECK(q.code == cli::kCounterexample);
  const json j = q.report();
  CHECK_FALSE(j["result"].empty());
  for (const auto& x : j["result"]) CHECK(x["reproduced"] == true);
}

TEST_CASE("reports are deterministic apart from the timestamp") {
  auto once = [] {
    auto j = run({"verify", "--a", "full", "--x", "M1", "--algebra", "nak1_3.json", "--json"}).report();
    j.erase("timestamp");
    return j.dump();
  };
  CHECK(once() == once());
  auto serial = run({"verify", "--a", "full", "--x", "M1", "--algebra", "nak1_3.json", "--json",
                     "--executor", "serial"}).report();
  serial.erase("timestamp");
  CHECK(serial.dump() == once());
}

TEST_CASE("exit code precedence") {
  Verdict p, f, i;
  f.status = Status::Fail;
  i.status = Status::Inconclusive;
  CHECK(cli::exit_code({}) == 0);
  CHECK(cli::exit_code({p, i}) == 3);
  CHECK(cli::exit_code({i, f, p}) == 1);
}
