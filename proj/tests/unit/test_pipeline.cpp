#include <doctest.h>

#include "pencil/error.hpp"
#include "pencil/pipeline.hpp"

using namespace pencil;

namespace {

RunConfig small() {
  RunConfig c;
  c.p = 3;
  c.q = 2;
  c.alphas = {2.0, 1.0};
  return c;
}

}  // namespace

TEST_CASE("(3,2) passes every verdict") {
  RunConfig c = small();
  c.flex = true;
  const RunReport r = run_pipeline(c);
  CHECK(r.passed());
  for (const char* name : {"torus-form", "intersection-multiplicity", "infinity", "scripted-reduction",
                           "battery-numeric-affine", "battery-numeric-projective",
                           "battery-symbolic-projective", "abelianization", "alexander", "flex-redundancy"}) {
    CAPTURE(name);
    REQUIRE(r.verdict(name) != nullptr);
    CHECK(r.verdict(name)->verdict == Verdict::Pass);
  }
  CHECK(r.intersection_multiplicities == std::vector<int>{9});
  REQUIRE(r.alexander_numeric.has_value());
  CHECK(to_string(*r.alexander_numeric) == "t^5 - t^4 + t^3 - t^2 + t - 1");
  CHECK(r.battery_numeric_projective == r.battery_expected_projective);
  CHECK(report_to_table(r).find("flex-redundancy") != std::string::npos);
}

TEST_CASE("JSON reports are deterministic apart from timings") {
  const RunReport a = run_pipeline(small());
  const RunReport b = run_pipeline(small());
  const Json ja = report_to_json(a, false);
  CHECK(ja.at("schema") == "pencil-monodromy/1");
  CHECK_FALSE(ja.contains("timings"));
  CHECK(report_to_json(a, true).contains("timings"));
  CHECK(ja.dump() == report_to_json(b, false).dump());
}

TEST_CASE("scrambled loop order fails the infinity check") {
  RunConfig c = small();
  c.scramble_order = true;
  const RunReport r = run_pipeline(c);
  CHECK_FALSE(r.passed());
  REQUIRE(r.verdict("infinity") != nullptr);
  CHECK(r.verdict("infinity")->verdict == Verdict::Fail);
}

TEST_CASE("symbolic-only runs skip the numeric verdicts") {
  RunConfig c = small();
  c.numeric = false;
  const RunReport r = run_pipeline(c);
  CHECK(r.passed());
  REQUIRE(r.verdict("scripted-reduction") != nullptr);
  CHECK(r.verdict("scripted-reduction")->verdict == Verdict::Pass);
  const VerdictEntry* inf = r.verdict("infinity");
  CHECK((inf == nullptr || inf->verdict == Verdict::Skipped));
}

TEST_CASE("invalid configurations") {
  RunConfig c = small();
  c.alphas = {1.0, 2.0};
  CHECK_THROWS_AS(c.spec(), InvalidSpec);
  c = small();
  c.segments = 4;
  CHECK_THROWS_AS(c.spec(), InvalidSpec);
  c = small();
  c.tolerance = 0.0;
  CHECK_THROWS_AS(c.spec(), InvalidSpec);
  c = small();
  c.alphas = {1.0, 2.0};
  CHECK_THROWS_AS(run_pipeline(c), InvalidSpec);
}

TEST_CASE("quick selftest") {
  const auto reports = selftest({true, false});
  REQUIRE(reports.size() == 2);
  for (const auto& r : reports) CHECK(r.passed());
}
