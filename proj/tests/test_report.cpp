#include "doctest.h"
#include "mtrace/report.hpp"
#include "support.hpp"

using namespace testing;

namespace {

Json d2_instance() {
  return Json::parse(R"({"field": "Q", "k": 2, "generators": [[["1", "0"], ["0", "0"]]],
                         "functional": {"kind": "K", "K": [["1/2", "1"], ["1", "1/2"]]}})");
}

std::string error_text(const Json& j) {
  try {
    (void)instance_from_json(j);
  } catch (const Error& err) {
    return err.what();
  }
  return "";
}

}  // namespace

TEST_CASE("instance parsing") {
  const auto inst = instance_from_json(d2_instance());
  CHECK(inst.field == Q);
  CHECK(inst.k == 2);
  CHECK(inst.generators.size() == 1);
  REQUIRE(inst.functional);
  CHECK(inst.budget == kDefaultBudget);
  CHECK(instance_from_json(to_json(inst)).generators == inst.generators);
  CHECK(to_json(instance_from_json(to_json(inst))) == to_json(inst));
}

TEST_CASE("parse errors name the offending location") {
  auto j = d2_instance();
  j["generators"][0][1][0] = "x";
  CHECK(error_text(j).find("instance.generators[0][1][0]") != std::string::npos);
  j = d2_instance();
  j["generators"][0][1] = Json::array({"1"});
  CHECK(error_text(j).find("instance.generators[0][1]") != std::string::npos);
  j = d2_instance();
  j.erase("k");
  CHECK(error_text(j).find("\"k\"") != std::string::npos);
  j = d2_instance();
  j["field"] = "GF(6)";
  CHECK(error_text(j).find("instance.field") != std::string::npos);
  j = d2_instance();
  j["functional"]["kind"] = "trace";
  CHECK(error_text(j).find("instance.functional.kind") != std::string::npos);
  j = d2_instance();
  j["functional"]["K"][0][0] = "1";
  CHECK(error_text(j).find("NotUnitalFunctional") == 0);
}

TEST_CASE("rank-one functionals in instance files") {
  auto j = d2_instance();
  j["functional"] = Json::parse(R"({"kind": "rank1", "x": ["1", "1"], "alpha": ["1/2", "1/2"]})");
  const auto inst = instance_from_json(j);
  CHECK(inst.functional->is_rank_one());
  j["functional"] = Json::parse(R"({"kind": "rank1", "K": [["1", "0"], ["1", "0"]]})");
  CHECK_FALSE(instance_from_json(j).functional->is_rank_one());
  j["functional"] = Json::parse(R"({"kind": "rank1", "K": [["1/2", "0"], ["0", "1/2"]]})");
  CHECK_THROWS_AS(instance_from_json(j), Error);
}

TEST_CASE("commands produce reports with exit codes") {
  const auto inst = instance_from_json(d2_instance());
  const auto max = run_command("maximal", inst);
  CHECK(max.exit_code == kExitOk);
  CHECK(max.report["result"]["verdict"]["outcome"] == "Maximal");
  CHECK(max.report["tool"] == kToolName);
  CHECK(max.report["instance"] == to_json(inst));
  for (const auto* cmd : {"closure", "commutant", "tracial-check", "foes", "classify2x2"}) {
    CHECK(run_command(cmd, inst).exit_code == kExitOk);
  }
  CHECK_THROWS_AS(run_command("nonsense", inst), Error);
  CHECK_THROWS_AS(run_command("thm10", inst), Error);

  auto r1 = d2_instance();
  r1["functional"] = Json::parse(R"({"kind": "rank1", "x": ["1", "1"], "alpha": ["1/2", "1/2"]})");
  const auto rank_one = instance_from_json(r1);
  const auto t10 = run_command("thm10", rank_one);
  CHECK(t10.exit_code == kExitOk);
  CHECK(t10.report["result"]["verdict"] == true);

  auto bad = d2_instance();
  bad["generators"].push_back(Json::parse(R"([["0", "1"], ["0", "0"]])"));
  bad["functional"]["K"] = Json::parse(R"([["1/2", "0"], ["1", "1/2"]])");
  const auto viol = run_command("maximal", instance_from_json(bad));
  CHECK(viol.exit_code == kExitViolation);
  CHECK(viol.report["result"]["verdict"]["certificate"] == "TracialityViolation");
  CHECK(run_command("tracial-check", instance_from_json(bad)).exit_code == kExitViolation);
}

TEST_CASE("unknown verdicts exit with 3") {
  // A non-abelian algebra over Q with a large FOES leaves the cascade without a decision.
  auto j = Json::parse(R"({"field": "Q", "k": 3, "generators": [[["0","1","0"],["0","0","0"],["0","0","0"]]],
                           "functional": {"kind": "K", "K": [["1","0","0"],["0","0","0"],["0","0","0"]]}})");
  const auto inst = instance_from_json(j);
  const auto r = run_command("maximal", inst);
  if (r.report["result"]["verdict"]["outcome"] == "Unknown") CHECK(r.exit_code == kExitUnknown);
  else CHECK(r.exit_code == kExitOk);
}

TEST_CASE("reports are deterministic and recheck") {
  const auto inst = instance_from_json(d2_instance());
  for (const auto* cmd : {"maximal", "classify2x2", "foes", "thm15", "commutant"}) {
    const auto first = run_command(cmd, inst);
    const auto second = run_command(cmd, inst);
    CHECK(dump(first.report) == dump(second.report));
    const auto rc = recheck(Json::parse(dump(first.report)));
    CHECK(rc.ok);
  }
  const auto sweep = run_verify_gf(2);
  CHECK(sweep.exit_code == kExitOk);
  CHECK(sweep.report["result"]["mismatches"].empty());
  CHECK(recheck(sweep.report).ok);
  for (const auto& name : scenario_names()) {
    const auto sc = run_scenario(name);
    CHECK(sc.exit_code == kExitOk);
    CHECK(recheck(sc.report).ok);
  }
}

TEST_CASE("recheck rejects tampered certificates") {
  auto j = d2_instance();
  j["functional"]["K"] = Json::parse(R"([["1/2", "0"], ["1", "1/2"]])");
  const auto r = run_command("maximal", instance_from_json(j));
  REQUIRE(r.report["result"]["verdict"]["certificate"] == "WitnessExtension");
  auto tampered = r.report;
  tampered["result"]["verdict"]["witness"] = Json::parse(R"([["0", "1"], ["0", "0"]])");
  const auto rc = recheck(tampered);
  CHECK_FALSE(rc.ok);
  CHECK_FALSE(rc.problems.empty());

  auto flipped = r.report;
  flipped["result"]["verdict"]["outcome"] = "Maximal";
  CHECK_FALSE(recheck(flipped).ok);

  auto other = run_command("maximal", instance_from_json(d2_instance())).report;
  other["instance"]["functional"]["K"] = Json::parse(R"([["1/2", "0"], ["1", "1/2"]])");
  CHECK_FALSE(recheck(other).ok);
}

TEST_CASE("scenario parameters") {
  const auto r = run_scenario("diagonal", Json::parse(R"({"f": ["1", "0", "1"], "alpha": ["1/2", "0", "1/2"]})"));
  CHECK(r.exit_code == kExitOk);
  CHECK(r.report["result"]["expected"] == "NotMaximal");
  CHECK(r.report["params"]["weights"].size() == 3);
  CHECK_THROWS_AS(run_scenario("diagonal", Json::parse(R"({"colour": 1})")), Error);
  CHECK_THROWS_AS(run_scenario("nope"), Error);
  const auto gf3 = run_scenario("left-regular", Json::parse(R"j({"field": "GF(3)"})j"));
  CHECK(gf3.report["result"]["exhaustive_confirmation"]["enumerated"] == 81);
}
