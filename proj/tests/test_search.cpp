#include <string>
#include <vector>

#include "doctest.h"
#include "smc/fixtures.hpp"
#include "smc/pairs.hpp"
#include "smc/search.hpp"
#include "smc/structure.hpp"

using namespace smc;

namespace {

std::size_t aut_order(const std::string& name) {
  return automorphisms(fixture_structure(name)).size();
}

}  // namespace

TEST_CASE("automorphism group orders") {
  CHECK(aut_order("examp1") == 16);
  CHECK(aut_order("examp2") == 64);
  CHECK(aut_order("steiner-ce") == 64);
  CHECK(aut_order("overlap-flowers") == 96);
  CHECK(aut_order("overlap-flowers-2") == 128);
  CHECK(aut_order("k4-design") == 24);
  CHECK(aut_order("alpha-line-3") == 6);
  CHECK(aut_order("alpha-line-4") == 24);
  CHECK(aut_order("alpha-line-5") == 120);
}

TEST_CASE("stabilizer orders and fixed points") {
  const Structure s = fixture_structure("examp1");
  const PointSet I = s.base_set();
  const auto pw = automorphisms(s, I);
  const auto sw = automorphisms(s, PointSet{0}, std::vector<PointSet>{I});
  CHECK(pw.size() == 4);
  CHECK(sw.size() == 8);
  CHECK(s.names_of(fixed_points(s, pw)) ==
        std::vector<std::string>{"a1", "a2"});
  CHECK(fixed_points(s, sw) == 0);
}

TEST_CASE("orbits of the first worked example") {
  const Structure s = fixture_structure("examp1");
  const auto pw = automorphisms(s, s.base_set());
  const auto orbs = orbits(s, pw);
  REQUIRE(orbs.size() == 4);
  CHECK(s.names_of(orbs[2]) == std::vector<std::string>{"b1", "b2"});
  CHECK(s.names_of(orbs[3]) == std::vector<std::string>{"c1", "c2"});
}

TEST_CASE("large symmetrized stabilizers") {
  const Structure s = fixture_structure("examp2-sym");
  const PointSet I = s.base_set();
  CHECK(automorphisms(s, I).size() == 1024);
  CHECK(automorphisms(s, PointSet{0}, std::vector<PointSet>{I}).size() ==
        2048);
}

TEST_CASE("embeddings of a petal pair over its base") {
  const Structure s = fixture_structure("examp2");
  const PointSet cblock = s.set_of_names({"c1", "c2", "c3"});
  std::vector<int> remap;
  const Structure sub = induced(s, cblock | s.base_set(), &remap);
  std::vector<std::pair<int, int>> fixed;
  for_each_point(s.base_set(), [&](int p) { fixed.emplace_back(remap[p], p); });
  const auto maps = embeddings(sub, s, fixed);
  CHECK(maps.size() == 4);
  // Images land on the two blocks only.
  for (const Embedding& e : maps) {
    const PointSet img = e.image_of(sub.all()) & ~s.base_set();
    const bool c = img == s.set_of_names({"c1", "c2", "c3"});
    const bool d = img == s.set_of_names({"d1", "d2", "d3"});
    CHECK((c || d));
  }
}

TEST_CASE("setwise constraints restrict embeddings") {
  const Structure s = fixture_structure("examp1");
  const PointSet I = s.base_set();
  const auto moved = automorphisms(s, PointSet{0}, std::vector<PointSet>{I});
  for (const Perm& g : moved) {
    PointSet img = 0;
    for_each_point(I, [&](int p) { img |= point_bit(g[static_cast<std::size_t>(p)]); });
    CHECK(img == I);
  }
}

TEST_CASE("canonical codes identify isomorphic pairs") {
  const Structure s = fixture_structure("examp1");
  const auto all = enumerate_good_pairs_all(s, 4);
  REQUIRE(all.size() == 6);
  // The four 4-point extensions are pairwise isomorphic as marked pairs;
  // the two 2-point extensions are of two further distinct types.
  CHECK(all[2].code == all[3].code);
  CHECK(all[2].code == all[4].code);
  CHECK(all[2].code == all[5].code);
  // The a-pair over the b-pair and the c-pair over the b-pair carry the same
  // marked-pair shape: two triples through a shared 2-point extension.
  CHECK(all[0].code == all[1].code);
  CHECK(all[0].code != all[2].code);
  CHECK(enumerate_good_pairs(s, 4).size() == 2);
}

TEST_CASE("codes survive the hex round-trip") {
  const Structure s = fixture_structure("k4-design");
  const CanonCode code = canon(s);
  CHECK(from_hex(to_hex(code)) == code);
  CHECK_FALSE(to_hex(code).empty());
}

TEST_CASE("isomorphic relabelings share a canonical code") {
  const Structure a = parse(
      "flavor: hypergraph\npoints: x y z w\nrel: x y z\nrel: y z w\n");
  const Structure b = parse(
      "flavor: hypergraph\npoints: p q r s\nrel: q r s\nrel: p q r\n");
  CHECK(canon(a) == canon(b));
  const Structure c = parse(
      "flavor: hypergraph\npoints: x y z w\nrel: x y z\nrel: x y w\n");
  CHECK(canon(a) == canon(c));  // still two triples sharing two points
  const Structure d = parse(
      "flavor: hypergraph\npoints: x y z w\nrel: x y z\n");
  CHECK_FALSE(canon(a) == canon(d));
}
