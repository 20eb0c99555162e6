#ifndef SMC_SELFTEST_HPP
#define SMC_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "smc/fixtures.hpp"

namespace smc {

// Outcome of the whole-library property suite: one check line per property
// (violation counts in the detail) plus one line per registered fixture's
// assertion table.
struct SelftestReport {
  std::uint64_t seed = 1;
  int random_per_flavor = 500;
  std::vector<FixtureCheck> checks;
  bool all_pass = true;
};

// Runs the property suite: predimension submodularity, the flatness
// inequality (arbitrary families in hypergraph flavor, d-closed families in
// both), closure laws against a brute-force oracle, free-amalgam
// predimension additivity and strong-side preservation, connectedness and
// base coincidence of enumerated good pairs, the three-strata line law and
// petal accounting on decomposable fixtures, chain reorder legality,
// fixture round-trips, and every fixture's assertion table.
//
// Deterministic for a given seed.  `random_per_flavor` random structures of
// at most 8 points are generated per flavor (plus the exhaustive sweeps on
// the small fixtures).
SelftestReport run_selftest(std::uint64_t seed = 1, int random_per_flavor = 500);

// The property checks only (everything except the per-fixture assertion
// tables); used where fixture tables are verified separately.
SelftestReport run_property_suite(std::uint64_t seed = 1,
                                  int random_per_flavor = 500);

}  // namespace smc

#endif  // SMC_SELFTEST_HPP
