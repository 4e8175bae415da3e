#include <catch2/catch_amalgamated.hpp>

#include <metrext/report_io.hpp>
#include <metrext/verify.hpp>

#include "fixtures.hpp"

using namespace metrext;

namespace {
const CheckReport* find(const std::vector<CheckReport>& reps, const std::string& name) {
  for (const auto& r : reps)
    if (r.check == name) return &r;
  return nullptr;
}
}  // namespace

TEST_CASE("axiom scan finds the first violation") {
  SECTION("asymmetry") {
    const PairFunction m = PairFunction::from_rows(
        PairDomain::OverY, {{0.0, 1.0}, {1.5, 0.0}});
    const CheckReport r = check_metric_axioms(m, AxiomMode::Pseudometric, 1e-9);
    REQUIRE(r.status == CheckStatus::Fail);
    REQUIRE(r.witness->points == std::vector<int>{0, 1});
    REQUIRE_THAT(r.witness->detail, Catch::Matchers::ContainsSubstring("asymmetric"));
  }
  SECTION("nonzero diagonal") {
    const PairFunction m = PairFunction::from_rows(
        PairDomain::OverY, {{0.0, 1.0}, {1.0, 0.5}});
    const CheckReport r = check_metric_axioms(m, AxiomMode::Pseudometric, 1e-9);
    REQUIRE(r.status == CheckStatus::Fail);
    REQUIRE(r.witness->points == std::vector<int>{1});
  }
  SECTION("triangle inequality") {
    const PairFunction m = PairFunction::from_rows(
        PairDomain::OverY, {{0.0, 1.0, 3.0}, {1.0, 0.0, 1.0}, {3.0, 1.0, 0.0}});
    const CheckReport r = check_metric_axioms(m, AxiomMode::Pseudometric, 1e-9);
    REQUIRE(r.status == CheckStatus::Fail);
    REQUIRE(r.witness->points == std::vector<int>{0, 1, 2});
    REQUIRE(r.witness->values[0] == 3.0);
    REQUIRE(r.witness->values[1] == 2.0);
  }
  SECTION("strict positivity only in metric mode") {
    const PairFunction m = PairFunction::from_rows(
        PairDomain::OverY, {{0.0, 0.0}, {0.0, 0.0}});
    REQUIRE(check_metric_axioms(m, AxiomMode::Pseudometric, 1e-9).status ==
            CheckStatus::Pass);
    const CheckReport r = check_metric_axioms(m, AxiomMode::Metric, 1e-9);
    REQUIRE(r.status == CheckStatus::Fail);
    REQUIRE_THAT(r.witness->detail, Catch::Matchers::ContainsSubstring("vanishing"));
  }
}

TEST_CASE("suite covers every check exactly once, sorted by name") {
  const Instance inst = make_line4();
  const auto reps = run_invariant_suite(inst, Operator::T, DiagVariant::BaseDiagonal, 0, 4);
  REQUIRE(reps.size() == 13);
  for (std::size_t i = 1; i < reps.size(); ++i) REQUIRE(reps[i - 1].check < reps[i].check);
  const char* expected[] = {
      "constants",        "extension-identity", "group-invariance",
      "group-retraction", "linearity",          "locality",
      "metric-preservation", "monotonicity",    "positivity",
      "pseudometric-preservation", "quantitative-floors", "sandwich",
      "tail-exactness"};
  for (std::size_t i = 0; i < reps.size(); ++i) REQUIRE(reps[i].check == expected[i]);
  REQUIRE(all_required_pass(reps));

  // no group in the instance: group checks are shelved, the rest ran
  REQUIRE(find(reps, "group-invariance")->status == CheckStatus::NotApplicable);
  REQUIRE(find(reps, "group-retraction")->status == CheckStatus::NotApplicable);
  REQUIRE(find(reps, "locality")->status == CheckStatus::Pass);
  REQUIRE(find(reps, "sandwich")->status == CheckStatus::Pass);
}

TEST_CASE("applicability by operator and variant") {
  const Instance inst = make_line4();

  const auto s1 = run_invariant_suite(inst, Operator::S1, DiagVariant::BaseDiagonal, 0, 4);
  int na = 0;
  for (const auto& r : s1) na += r.status == CheckStatus::NotApplicable;
  REQUIRE(na == 7);  // five series-only checks plus two group checks
  REQUIRE_THAT(find(s1, "locality")->notes,
               Catch::Matchers::ContainsSubstring("operator T"));

  const auto zd = run_invariant_suite(inst, Operator::T, DiagVariant::ZeroDiagonal, 0, 4);
  REQUIRE(find(zd, "sandwich")->status == CheckStatus::NotApplicable);
  REQUIRE_THAT(find(zd, "sandwich")->notes,
               Catch::Matchers::ContainsSubstring("zero-diagonal"));

  const Instance sq = make_square5();
  const auto iv = run_invariant_suite(sq, Operator::I, DiagVariant::BaseDiagonal, 0, 4);
  REQUIRE(find(iv, "group-invariance")->status == CheckStatus::Pass);
  REQUIRE(find(iv, "group-retraction")->status == CheckStatus::Pass);
  REQUIRE(all_required_pass(iv));
}

TEST_CASE("documented failures are reported as expected") {
  const Instance inst = make_line4();

  const auto s1 = run_invariant_suite(inst, Operator::S1, DiagVariant::BaseDiagonal, 0, 4);
  const CheckReport* c = find(s1, "constants");
  REQUIRE(c->status == CheckStatus::Fail);
  REQUIRE(c->expected_fail);
  REQUIRE(all_required_pass(s1));

  const auto s2 = run_invariant_suite(inst, Operator::S2, DiagVariant::BaseDiagonal, 0, 4);
  const CheckReport* pos = find(s2, "positivity");
  REQUIRE(pos->status == CheckStatus::Fail);
  REQUIRE(pos->expected_fail);
  REQUIRE(pos->witness);

  const auto s = run_invariant_suite(inst, Operator::S, DiagVariant::BaseDiagonal, 0, 4);
  const CheckReport* mp = find(s, "metric-preservation");
  REQUIRE(mp->status == CheckStatus::Fail);
  REQUIRE(mp->expected_fail);

  // zero-diagonal series: constants sag strictly below the input constant,
  // first seen at the outside pair
  const auto zd = run_invariant_suite(inst, Operator::T, DiagVariant::ZeroDiagonal, 0, 4);
  const CheckReport* zc = find(zd, "constants");
  REQUIRE(zc->status == CheckStatus::Fail);
  REQUIRE(zc->expected_fail);
  REQUIRE(zc->witness->points == std::vector<int>{2, 3});
  REQUIRE(zc->witness->values[0] < zc->witness->values[1]);
  REQUIRE(all_required_pass(zd));
}

TEST_CASE("a true failure is not excused") {
  std::vector<CheckReport> reps(2);
  reps[0].check = "a";
  reps[0].status = CheckStatus::Fail;
  reps[0].expected_fail = true;
  reps[1].check = "b";
  reps[1].status = CheckStatus::Pass;
  REQUIRE(all_required_pass(reps));
  reps[1].status = CheckStatus::Fail;
  REQUIRE_FALSE(all_required_pass(reps));
}

TEST_CASE("suite runs are deterministic in their inputs") {
  const Instance inst = make_line4();
  const auto a = run_invariant_suite(inst, Operator::T, DiagVariant::BaseDiagonal, 7, 6);
  const auto b = run_invariant_suite(inst, Operator::T, DiagVariant::BaseDiagonal, 7, 6);
  REQUIRE(reports_to_json(a).dump() == reports_to_json(b).dump());
}

TEST_CASE("suite argument validation") {
  const Instance inst = make_line4();
  REQUIRE_THROWS_AS(run_invariant_suite(inst, Operator::T, DiagVariant::BaseDiagonal, 0, 0),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(run_invariant_suite(inst, Operator::I, DiagVariant::BaseDiagonal, 0, 3),
                    std::invalid_argument);
}

TEST_CASE("report table prints status, names and witnesses") {
  const Instance inst = make_line4();
  const auto reps = run_invariant_suite(inst, Operator::S2, DiagVariant::BaseDiagonal, 0, 4);
  const std::string table = format_report_table(reps);
  REQUIRE_THAT(table, Catch::Matchers::ContainsSubstring("expected-fail"));
  REQUIRE_THAT(table, Catch::Matchers::ContainsSubstring("positivity"));
  REQUIRE_THAT(table, Catch::Matchers::ContainsSubstring("not-applicable"));
  REQUIRE_THAT(table, Catch::Matchers::ContainsSubstring("witness"));
}
