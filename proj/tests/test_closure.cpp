// Intrinsic closure, dimension and algebraic-closure traces.

#include <string>
#include <vector>

#include "doctest.h"
#include "smc/closure.hpp"
#include "smc/fixtures.hpp"
#include "smc/predim.hpp"
#include "smc/structure.hpp"

using namespace smc;

namespace {

std::vector<std::string> names(const Structure& s, PointSet m) { return s.names_of(m); }

}  // namespace

TEST_CASE("dimension values on the worked examples") {
  const Structure e1 = fixture_structure("examp1");
  CHECK(dim(e1, 0) == 0);
  CHECK(dim(e1, e1.set_of_names({"c1"})) == 1);
  CHECK(dim(e1, e1.base_set()) == 2);
  CHECK(dim(e1, e1.all()) == 2);

  const Structure e2 = fixture_structure("examp2");
  CHECK(dim(e2, e2.set_of_names({"a1"})) == 1);
  CHECK(dim(e2, e2.set_of_names({"a1", "alpha2"})) == 2);
  CHECK(dim(e2, e2.base_set()) == 2);

  const Structure k4 = fixture_structure("k4-design");
  CHECK(dim(k4, k4.set_of_names({"w"})) == 0);
  CHECK(dim(k4, 0) == 0);

  const Structure st = fixture_structure("steiner-ce");
  CHECK(dim(st, st.set_of_names({"a1"})) == 1);
  CHECK(dim(st, st.set_of_names({"a1", "alpha1"})) == 2);
  CHECK(dim(st, st.set_of_names({"a2", "alpha1"})) == 2);
  CHECK(dim(st, st.base_set()) == 2);
}

TEST_CASE("intrinsic closure is the least strong superset") {
  const Structure e1 = fixture_structure("examp1");

  const auto only_c1 = icl(e1, e1.set_of_names({"c1"}));
  CHECK(names(e1, only_c1.closure) == std::vector<std::string>{"c1"});
  CHECK(only_c1.chain.size() == 1);

  const auto grown = icl(e1, e1.set_of_names({"a1", "a2", "b1", "c1"}));
  CHECK(names(e1, grown.closure) ==
        std::vector<std::string>{"a1", "a2", "b1", "b2", "c1", "c2"});
  CHECK(grown.chain.size() == 2);
  CHECK(grown.chain.front().first == grown.input);
  CHECK(grown.chain.back().first == grown.closure);
  CHECK(grown.chain.back().second == dim(e1, grown.input));
  CHECK(is_strong(e1, grown.closure));

  const Structure k4 = fixture_structure("k4-design");
  const auto from_w = icl(k4, k4.set_of_names({"w"}));
  CHECK(names(k4, from_w.closure) == std::vector<std::string>{"w", "x", "y", "z"});
  CHECK(delta(k4, from_w.closure) == 0);
}

TEST_CASE("strongness of fixture bases") {
  CHECK(is_strong(fixture_structure("examp1"), fixture_structure("examp1").base_set()));
  CHECK(is_strong(fixture_structure("examp2"), fixture_structure("examp2").base_set()));
  CHECK(is_strong(fixture_structure("steiner-ce"), fixture_structure("steiner-ce").base_set()));
  const Structure of = fixture_structure("overlap-flowers");
  CHECK_FALSE(is_strong(of, of.base_set()));
  CHECK(dim(of, of.base_set()) == 0);
  CHECK(delta(of, of.base_set()) == 3);
}

TEST_CASE("d-closed sets and algebraic-closure traces") {
  const Structure e1 = fixture_structure("examp1");
  CHECK(is_dclosed(e1, 0));
  CHECK(is_dclosed(e1, e1.all()));
  CHECK_FALSE(is_dclosed(e1, e1.base_set()));  // b1 keeps the dimension at 2
  CHECK(names(e1, acl_trace(e1, e1.base_set())) ==
        std::vector<std::string>{"a1", "a2", "b1", "b2", "c1", "c2"});
  CHECK(acl_trace(e1, 0) == 0);

  const Structure k4 = fixture_structure("k4-design");
  CHECK(names(k4, acl_trace(k4, 0)) == std::vector<std::string>{"w", "x", "y", "z"});

  const Structure of = fixture_structure("overlap-flowers");
  CHECK(acl_trace(of, 0) == of.all());

  const Structure of2 = fixture_structure("overlap-flowers-2");
  CHECK(acl_trace(of2, 0) == 0);
  CHECK(acl_trace(of2, of2.base_set()) == of2.all());
}

TEST_CASE("the dimension oracle agrees with the direct scans") {
  const Structure e2 = fixture_structure("examp2");
  const DimOracle oracle(e2);
  CHECK(&oracle.ambient() == &e2);
  CHECK(oracle.dim(e2.base_set()) == 2);
  CHECK(oracle.dim(e2.set_of_names({"a1"})) == 1);
  CHECK(oracle.dim(0) == 0);

  const std::vector<PointSet> probes = {
      0,
      e2.base_set(),
      e2.set_of_names({"a1"}),
      e2.set_of_names({"alpha1", "alpha2"}),
      e2.set_of_names({"a1", "c1", "gamma1"}),
      e2.all(),
  };
  for (PointSet p : probes) {
    CAPTURE(p);
    CHECK(oracle.dim(p) == dim(e2, p));
    CHECK(oracle.icl_set(p) == icl(e2, p).closure);
    CHECK(oracle.acl_trace(p) == acl_trace(e2, p));
    CHECK(oracle.is_strong(p) == is_strong(e2, p));
  }

  // Linear-space ambients take the direct-scan path.
  const Structure st = fixture_structure("steiner-ce");
  const DimOracle lin(st);
  CHECK(lin.dim(st.set_of_names({"a1", "alpha1"})) == 2);
  CHECK(lin.icl_set(st.base_set()) == icl(st, st.base_set()).closure);
}

TEST_CASE("oracle queries refuse oversized ambients") {
  std::string text = "flavor: hypergraph\npoints:";
  for (int i = 0; i < 27; ++i) text += " p" + std::to_string(i);
  text += "\n";
  const Structure big = parse(text);
  const DimOracle oracle(big);  // construction itself stays cheap
  try {
    (void)oracle.dim(0);
    FAIL("expected an error for a 27-point ambient");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooManyPoints);
  }
}
