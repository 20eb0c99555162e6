// Drives the randomized/exhaustive property suite at a moderate sample size.
// The full-size run is exercised by the acceptance binary; here we care that
// the suite is wired, deterministic, and clean at a smaller population.

#include <set>
#include <string>

#include "doctest.h"
#include "smc/selftest.hpp"

using namespace smc;

TEST_CASE("property suite is clean at 150 random structures per flavor") {
  const SelftestReport report = run_property_suite(1, 150);
  CHECK(report.seed == 1);
  CHECK(report.random_per_flavor == 150);
  REQUIRE_FALSE(report.checks.empty());

  std::set<std::string> labels;
  for (const auto& check : report.checks) {
    CAPTURE(check.label);
    CAPTURE(check.detail);
    CHECK(check.pass);
    CHECK(labels.insert(check.label).second);  // labels are unique
  }
  CHECK(report.all_pass);
}

TEST_CASE("property suite is deterministic for a fixed seed") {
  const SelftestReport a = run_property_suite(7, 10);
  const SelftestReport b = run_property_suite(7, 10);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CAPTURE(a.checks[i].label);
    CHECK(a.checks[i].label == b.checks[i].label);
    CHECK(a.checks[i].pass == b.checks[i].pass);
    CHECK(a.checks[i].detail == b.checks[i].detail);
  }
  CHECK(a.all_pass);
}

TEST_CASE("property suite stays clean under a different seed") {
  const SelftestReport report = run_property_suite(42, 25);
  for (const auto& check : report.checks) {
    CAPTURE(check.label);
    CAPTURE(check.detail);
    CHECK(check.pass);
  }
  CHECK(report.all_pass);
}

TEST_CASE("full selftest adds the per-example assertion tables") {
  const SelftestReport props = run_property_suite(3, 5);
  const SelftestReport full = run_selftest(3, 5);
  CHECK(full.checks.size() > props.checks.size());
  CHECK(full.all_pass);
}
