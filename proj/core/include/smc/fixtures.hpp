#ifndef SMC_FIXTURES_HPP
#define SMC_FIXTURES_HPP

#include <string>
#include <vector>

#include "smc/definability.hpp"
#include "smc/pairs.hpp"
#include "smc/structure.hpp"

namespace smc {

// A registered worked example: the structure text, its bound function, and
// how far its normality is certified for the two stabilizer kinds.
struct FixtureInfo {
  const char* name;
  const char* struct_text;
  const char* mu_text;  // nullptr when the fixture has no bound function
  bool certified_pointwise;
  bool certified_setwise;
};

const std::vector<FixtureInfo>& fixture_registry();

// Lookup by name; throws UnknownFixture for unregistered names.
const FixtureInfo& fixture_info(const std::string& name);
Structure fixture_structure(const std::string& name);
MuFunction fixture_mu(const std::string& name);
NormalityCertificate fixture_certificate(const std::string& name);
bool is_fixture(const std::string& name);

// One named assertion about a fixture, checked against freshly computed
// values.
struct FixtureCheck {
  std::string label;
  bool pass;
  std::string detail;  // expected/actual rendering on failure
};

struct FixtureReport {
  std::string name;
  std::vector<FixtureCheck> checks;
  bool all_pass = true;
};

// Recomputes the fixture's recorded facts (predimension, group orders,
// decomposition shape, closure verdicts, flower counts) and compares.
// Throws UnknownFixture for unregistered names.
FixtureReport verify_fixture(const std::string& name);

}  // namespace smc

#endif  // SMC_FIXTURES_HPP
