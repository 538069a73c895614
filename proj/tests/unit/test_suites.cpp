#include "helpers.hpp"

#include "cstar/errors.hpp"
#include "cstar/suites.hpp"

using namespace cstar;

TEST_SUITE("suites") {
  TEST_CASE("every suite passes a small run") {
    for (const auto& name : suite_names()) {
      CAPTURE(name);
      SuiteConfig cfg;
      cfg.seed = 3;
      cfg.instances = 4;
      cfg.samples = 200;
      const SuiteResult r = run_suite(name, cfg);
      CHECK(r.passed);
      CHECK(r.failures.empty());
    }
  }

  TEST_CASE("zero instances pass vacuously with a warning") {
    SuiteConfig cfg;
    cfg.instances = 0;
    const SuiteResult r = run_suite("drazin-axioms", cfg);
    CHECK(r.passed);
    CHECK_FALSE(r.warnings.empty());
  }

  TEST_CASE("results do not depend on thread count") {
    SuiteConfig a;
    a.seed = 5;
    a.instances = 8;
    a.threads = 1;
    SuiteConfig b = a;
    b.threads = 4;
    CHECK(dump_json(report_json(run_suite("dual", a))) == dump_json(report_json(run_suite("dual", b))));
  }

  TEST_CASE("unknown suite") {
    CHECK_THROWS_AS(run_suite("nope", SuiteConfig{}), ParseError);
  }
}
