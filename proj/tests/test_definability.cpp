// Orbit analysis, definable-closure verdicts and base coding.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "smc/closure.hpp"
#include "smc/definability.hpp"
#include "smc/fixtures.hpp"
#include "smc/predim.hpp"
#include "smc/structure.hpp"

using namespace smc;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::logic_error("expected a library error");
}

Verdict star_of(const Structure& s, const DclstarReport& rep, const char* name) {
  return rep.dclstar[static_cast<std::size_t>(s.index_of(name))];
}

}  // namespace

TEST_CASE("verdict names") {
  CHECK(std::string(verdict_name(Verdict::Yes)) == "yes");
  CHECK(std::string(verdict_name(Verdict::No)) == "no");
  CHECK(std::string(verdict_name(Verdict::Undetermined)) == "undetermined");
}

TEST_CASE("movement always refutes membership") {
  const Structure s = fixture_structure("examp1");
  const DclstarReport rep =
      classify_dclstar(s, s.base_set(), fixture_certificate("examp1"));
  CHECK(rep.pointwise_order == 4);
  CHECK(rep.setwise_order == 8);
  CHECK(rep.fixed_pointwise == s.base_set());
  CHECK(rep.dclstar_trace == 0);
  CHECK(rep.sdclstar_trace == 0);
  for (int p = 0; p < s.n(); ++p)
    CHECK(rep.dclstar[static_cast<std::size_t>(p)] == Verdict::No);
}

TEST_CASE("the asymmetric petal points are definably closed over the base") {
  const Structure s = fixture_structure("examp2");
  const DclstarReport rep =
      classify_dclstar(s, s.base_set(), fixture_certificate("examp2"));
  CHECK(rep.pointwise_order == 32);
  CHECK(rep.setwise_order == 32);
  CHECK(s.names_of(rep.dclstar_trace) ==
        std::vector<std::string>{"alpha1", "alpha2"});
  CHECK(star_of(s, rep, "alpha1") == Verdict::Yes);
  CHECK(star_of(s, rep, "alpha2") == Verdict::Yes);
  CHECK(star_of(s, rep, "c1") == Verdict::No);
  CHECK(star_of(s, rep, "gamma1") == Verdict::No);
  CHECK((rep.sdclstar_trace & ~rep.dclstar_trace) == 0);
}

TEST_CASE("assumed normality downgrades every positive verdict") {
  const Structure s = fixture_structure("examp2");
  NormalityCertificate assumed;
  assumed.assumed = true;
  const DclstarReport rep = classify_dclstar(s, s.base_set(), assumed);
  const auto sdcl = [&](const char* name) {
    return rep.sdclstar[static_cast<std::size_t>(s.index_of(name))];
  };
  CHECK(sdcl("a1") == Verdict::Undetermined);
  CHECK(sdcl("a2") == Verdict::Undetermined);
  CHECK(sdcl("alpha1") == Verdict::Undetermined);
  CHECK(sdcl("alpha2") == Verdict::Undetermined);
  CHECK(sdcl("c1") == Verdict::No);
  CHECK(sdcl("delta1") == Verdict::No);
  CHECK(rep.sdclstar_trace == 0);
  // Membership refutations survive the downgrade.
  CHECK(star_of(s, rep, "c1") == Verdict::No);

  NormalityCertificate none;
  CHECK(code_of([&] { classify_dclstar(s, s.base_set(), none); }) ==
        Errc::NoCertificate);
  CHECK(code_of([&] {
          orbit_report(s, s.base_set(), GroupKind::Pointwise, none);
        }) == Errc::NoCertificate);
}

TEST_CASE("orbit reports carry per-element rows") {
  const Structure s = fixture_structure("examp1");
  const OrbitReport rep = orbit_report(s, s.base_set(), GroupKind::Pointwise,
                                       fixture_certificate("examp1"));
  CHECK(rep.group == GroupKind::Pointwise);
  CHECK(rep.certified);
  CHECK(rep.group_order == 4);
  CHECK(rep.fixed == s.base_set());
  REQUIRE(rep.orbits.size() == 4);
  CHECK(s.names_of(rep.orbits[2]) == std::vector<std::string>{"b1", "b2"});
  CHECK(s.names_of(rep.orbits[3]) == std::vector<std::string>{"c1", "c2"});
  REQUIRE(rep.per_element.size() == static_cast<std::size_t>(s.n()));

  const ElementReport& a1 = rep.per_element[static_cast<std::size_t>(s.index_of("a1"))];
  CHECK(a1.in_dcl);
  CHECK(a1.orbit == s.set_of_names({"a1"}));
  CHECK(a1.in_dclstar == Verdict::No);
  CHECK_FALSE(a1.safe);  // a one-point orbit outside the empty trace

  const ElementReport& b1 = rep.per_element[static_cast<std::size_t>(s.index_of("b1"))];
  CHECK_FALSE(b1.in_dcl);
  CHECK(b1.orbit == s.set_of_names({"b1", "b2"}));
  CHECK(b1.safe);  // dim {b1,b2} = 2
  for (const ElementReport& row : rep.per_element)
    CHECK(row.in_dcl == contains(rep.fixed, row.point));
}

TEST_CASE("a fully symmetric design pins nothing down") {
  const Structure s = fixture_structure("k4-design");
  const OrbitReport rep =
      orbit_report(s, 0, GroupKind::Pointwise, fixture_certificate("k4-design"));
  CHECK(rep.group_order == 24);
  REQUIRE(rep.orbits.size() == 1);
  CHECK(rep.orbits[0] == s.all());
  CHECK(rep.stars.dclstar_trace == 0);
  for (const ElementReport& row : rep.per_element) {
    CHECK(row.in_dclstar == Verdict::No);
    CHECK(row.safe);  // the whole point set is the trace of the empty set
  }
}

TEST_CASE("closure verdict invariants across the light fixtures") {
  const std::vector<std::string> light = {
      "examp1",       "examp2",       "overlap-flowers-2", "k4-design",
      "alpha-line-3", "alpha-line-4", "alpha-line-5"};
  for (const std::string& name : light) {
    CAPTURE(name);
    const Structure s = fixture_structure(name);
    const DclstarReport rep =
        classify_dclstar(s, s.base_set(), fixture_certificate(name));
    CHECK((rep.sdclstar_trace & ~rep.dclstar_trace) == 0);
    CHECK(rep.pointwise_order >= 1);
    CHECK(rep.setwise_order % rep.pointwise_order == 0);
    // yes-verdicts imply fixedness under the pointwise stabilizer.
    CHECK((rep.dclstar_trace & ~rep.fixed_pointwise) == 0);
    CHECK((rep.sdclstar_trace & ~rep.fixed_setwise) == 0);
  }
}

TEST_CASE("product choices on a designated line") {
  const Structure three = fixture_structure("alpha-line-3");
  const QuasigroupReport q3 =
      quasigroup_experiment(three, three.all(), three.base_set());
  CHECK(q3.line_too_short);
  CHECK(q3.stabilizer_order == 1);
  CHECK(q3.acts_full_symmetric);
  CHECK(three.names_of(q3.fixed_free) == std::vector<std::string>{"x1"});
  CHECK(q3.product_orbit == 1);
  CHECK(q3.definable_product);
  CHECK(q3.verdict == "definable-product");

  const Structure four = fixture_structure("alpha-line-4");
  const QuasigroupReport q4 =
      quasigroup_experiment(four, four.all(), four.base_set());
  CHECK_FALSE(q4.line_too_short);
  CHECK(q4.stabilizer_order == 2);
  CHECK(q4.acts_full_symmetric);
  CHECK(q4.fixed_free == 0);
  CHECK(q4.product_orbit == 2);
  CHECK_FALSE(q4.definable_product);
  CHECK(q4.verdict == "no-definable-product");
  CHECK(q4.free == (four.all() & ~four.base_set()));

  const Structure five = fixture_structure("alpha-line-5");
  const QuasigroupReport q5 =
      quasigroup_experiment(five, five.all(), five.base_set());
  CHECK(q5.stabilizer_order == 6);
  CHECK(q5.acts_full_symmetric);
  CHECK(q5.product_orbit == 3);
  CHECK_FALSE(q5.definable_product);

  CHECK_THROWS_AS(quasigroup_experiment(four, four.base_set(), four.base_set()),
                  std::invalid_argument);
  CHECK_THROWS_AS(quasigroup_experiment(four, four.all(), four.set_of_names({"x1"})),
                  std::invalid_argument);
  const Structure e1 = fixture_structure("examp1");
  CHECK_THROWS_AS(quasigroup_experiment(e1, e1.base_set(), e1.base_set()),
                  std::invalid_argument);
}

TEST_CASE("coding the base by a fixed set") {
  // On the 3-point line the free point's pointwise stabilizer coincides with
  // the setwise stabilizer of the base pair.
  const Structure three = fixture_structure("alpha-line-3");
  CHECK(codes_base(three, three.base_set(), 4));

  // On the 4-point line the setwise stabilizer fixes nothing, so no code set
  // of any size can reproduce it.
  const Structure four = fixture_structure("alpha-line-4");
  CHECK_FALSE(codes_base(four, four.base_set(), 4));

  const Structure e1 = fixture_structure("examp1");
  CHECK_FALSE(codes_base(e1, e1.base_set(), 4));

  // Degenerate: the empty set codes itself.
  const Structure k4 = fixture_structure("k4-design");
  CHECK(codes_base(k4, 0, 4));
}
