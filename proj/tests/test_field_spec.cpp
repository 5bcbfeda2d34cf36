#include <doctest.h>

#include "helpers.hpp"
#include "premetric/field_spec.hpp"

using namespace premetric;
using nlohmann::json;

namespace {

FieldSpec small(json j) {
  j["sample_plan"] = {{"kind", "random"}, {"count", 128}, {"seed", 4}};
  return parse_field_spec(j);
}

}  // namespace

TEST_CASE("field spec parsing") {
  const FieldSpec s = parse_field_spec(json::parse(R"js({
    "E": ["sin(z - xi)", 0, "0"], "B": ["0", "sin(z - xi)", "0"],
    "checks": ["nonlinear_spacetime", "linear_spacetime"],
    "sample_plan": {"kind": "grid", "points_per_axis": 3, "box": [[-1,1],[-1,1],[-2,2],[0,1]]},
    "tolerance": 1e-10})js"));
  REQUIRE(s.E);
  CHECK((*s.E)[1] == "0");
  CHECK(!s.alpha);
  CHECK(s.sample_plan.kind == SamplePlan::Kind::grid);
  CHECK(s.sample_plan.size() == 81);
  CHECK(s.sample_plan.box[2].second == 2.0);
  CHECK(s.tolerance == 1e-10);

  const FieldSpec c = parse_field_spec(json::parse(R"({"catalog": {"name": "plane_wave", "params": {"amplitude": 2}}})"));
  CHECK(c.catalog_name == "plane_wave");
  CHECK(c.catalog_params.at("amplitude") == "2");
  CHECK(parse_field_spec(json::parse(R"({"catalog": "bump_photon"})")).catalog_name == "bump_photon");
}

TEST_CASE("field spec rejects malformed input") {
  const char* bad[] = {
      R"([1, 2])",
      R"({"Efield": ["0","0","0"]})",
      R"({"E": ["0","0"]})",
      R"({"E": [true, "0", "0"]})",
      R"({"dimension": 3})",
      R"({"coordinates": ["x","y","xi","z"]})",
      R"({"coordinates": ["x","x","z","xi"]})",
      R"({"checks": ["maxwell"]})",
      R"({"tolerance": -1})",
      R"({"sample_plan": {"kind": "sobol"}})",
      R"({"sample_plan": {"box": [[0,1]]}})",
      R"({"sample_plan": {"count": "many"}})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_field_spec(json::parse(text)), SpecError);
  }
}

TEST_CASE("running checks") {
  const auto report = run_check(small({{"catalog", "running_wave_null"}}));
  CHECK(report.all_pass());
  std::vector<std::string> seen;
  for (const auto& r : report.results) {
    if (seen.empty() || seen.back() != r.check) seen.push_back(r.check);
    CHECK(r.n_points == 128);
  }
  auto expected = catalog_entry("running_wave_null").checks;
  std::sort(expected.begin(), expected.end());
  std::sort(seen.begin(), seen.end());
  CHECK(seen == expected);

  const auto fail = run_check(small({{"catalog", {{"name", "random_nonsolution"}, {"params", {{"seed", 2}}}}},
                                     {"checks", {"nonlinear_spacetime"}}}));
  CHECK_FALSE(fail.all_pass());

  const auto inline_ok = run_check(small({{"E", {"1", "0", "0"}}, {"B", {"0", "1", "0"}},
                                          {"alpha", {"1", "0", "0"}}, {"beta", {"0", "1", "0"}},
                                          {"checks", {"linear_prerel", "integrability", "static_balance"}}}));
  CHECK(inline_ok.all_pass());

  const auto vec = run_check(small({{"catalog", "autoparallel_null"}}));
  CHECK(vec.all_pass());
  CHECK(vec.results.front().check == "autoparallel");

  const auto renamed = run_check(small({{"coordinates", {"a", "b", "c", "xi"}},
                                        {"u", {"b", "0", "0", "0"}},
                                        {"checks", {"autoparallel"}}}));
  CHECK(renamed.all_pass());
}

TEST_CASE("conservation direction") {
  const auto ok = run_check(small({{"catalog", "running_wave_null"}, {"checks", {"conservation"}}}));
  CHECK(ok.all_pass());
  const auto off = run_check(small({{"catalog", "random_nonsolution"}, {"checks", {"conservation"}},
                                    {"identify_alpha_with_E", false}}));
  CHECK_FALSE(off.all_pass());
  CHECK_THROWS_AS(run_check(small({{"E", {"1", "0", "0"}}, {"X", {"1", "0", "0", "w"}},
                                   {"checks", {"conservation"}}})),
                  SpecError);
}

TEST_CASE("run_check input errors") {
  CHECK_THROWS_AS(run_check(small({{"checks", {"linear_prerel"}}})), SpecError);
  CHECK_THROWS_AS(run_check(small({{"E", {"1", "0", "0"}}})), SpecError);
  CHECK_THROWS_AS(run_check(small({{"E", {"q", "0", "0"}}, {"checks", {"linear_prerel"}}})), SpecError);
  CHECK_THROWS_AS(run_check(small({{"E", {"1", "0", "0"}}, {"checks", {"autoparallel"}}})), SpecError);
  CHECK_THROWS_AS(run_check(small({{"u", {"1", "0", "0", "0"}}, {"checks", {"linear_prerel"}}})), SpecError);
  CHECK_THROWS_AS(run_check(small({{"u", {"1", "0", "0", "0"}}, {"mode", "spacelike"}, {"checks", {"autoparallel"}}})),
                  SpecError);
  CHECK_THROWS_AS(run_check(small({{"catalog", "plane_wave"}, {"E", {"1", "0", "0"}}})), SpecError);
  CHECK_THROWS_AS(run_check(small({{"catalog", "nope"}})), SpecError);
  CHECK_THROWS_AS(run_check(small({{"catalog", {{"name", "plane_wave"}, {"params", {{"direction", 3}}}}}})), SpecError);
  CHECK_THROWS_AS(load_field_spec("/nonexistent/spec.json"), SpecError);
}

TEST_CASE("integrability reports independence warnings") {
  const auto r = run_check(small({{"E", {"1", "0", "0"}}, {"B", {"x", "0", "0"}}, {"checks", {"integrability"}}}));
  CHECK(r.warnings.size() == 1);
}

TEST_CASE("serialization") {
  const auto report = run_check(small({{"catalog", "plane_wave"}, {"checks", {"linear_spacetime"}}}));
  const json j = report_to_json(report);
  CHECK(j.at("verdict") == "pass");
  CHECK(j.at("checks").size() == report.results.size());
  CHECK(j.at("checks")[0].at("check") == "linear_spacetime");
  CHECK(j.at("checks")[0].contains("rms_residual"));

  const std::string csv = report_to_csv(report);
  CHECK(csv.rfind("check,name,max_abs_residual", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(report.results.size()) + 1);

  const json cat = catalog_to_json();
  CHECK(cat.at("entries").size() == catalog_entries().size());
  CHECK(cat.at("entries")[0].contains("params"));

  const auto ids = run_identities({2}, 3, 1);
  const json idj = identities_to_json(ids, {2}, 3, 1);
  CHECK(idj.at("verdict") == "pass");
  CHECK(idj.at("results").size() == ids.results.size());
}
