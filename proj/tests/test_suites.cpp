#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "closure_kernels/oracles.hpp"
#include "closure_kernels/suites.hpp"

using namespace ck;

TEST_CASE("faulty rule is caught with a counterexample") {
  SuiteOptions opt;
  opt.trials = 200;
  auto r = check_rule_safety(faulty_rule_spec(), opt);
  CHECK_FALSE(r.passed());
  REQUIRE(r.counterexample.has_value());
  // the stored instance really is one where deletion flips the answer
  auto inst = *r.counterexample;
  auto reduced = faulty_rule_spec().rule(inst);
  CHECK(solve(inst, opt.limits).yes != solve(reduced.instance, opt.limits).yes);
}

TEST_CASE("every rule passes a short run") {
  SuiteOptions opt;
  opt.trials = 60;
  for (const auto& r : suite_rule_safety(opt)) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed());
  }
}

TEST_CASE("suite reports are deterministic per seed") {
  SuiteOptions opt;
  opt.trials = 40;
  opt.seed = 77;
  auto a = suite_rule_safety(opt, "im");
  auto b = suite_rule_safety(opt, "im");
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].detail == b[i].detail);
    CHECK(a[i].trials == b[i].trials);
  }
}

TEST_CASE("suite selection") {
  SuiteOptions opt;
  opt.trials = 20;
  CHECK_THROWS_AS(run_suites("nope", opt), invalid_input);
  auto capvc = run_suites("capvc", opt);
  CHECK_FALSE(capvc.empty());
  for (const auto& r : capvc) CHECK(r.name.find("capvc") != std::string::npos);
  CHECK(rule_specs().size() == 14);
}
