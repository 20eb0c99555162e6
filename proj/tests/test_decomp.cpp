// Chain decompositions, reordering, strata, clusters and flowers.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "smc/decomp.hpp"
#include "smc/fixtures.hpp"
#include "smc/pairs.hpp"
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

std::vector<std::string> names(const Structure& s, PointSet m) { return s.names_of(m); }

}  // namespace

TEST_CASE("chain decomposition walks smallest extensions first") {
  const Structure s = fixture_structure("examp1");
  const LinearDecomposition ld = linear_decompose(s, s.base_set());
  CHECK(ld.ambient == &s);
  CHECK(ld.start == s.base_set());
  REQUIRE(ld.chain.size() == 4);
  CHECK(ld.chain.front() == s.base_set());
  CHECK(ld.chain.back() == s.all());
  REQUIRE(ld.steps.size() == 3);
  CHECK(names(s, ld.steps[0].ext) == std::vector<std::string>{"b1"});
  CHECK(names(s, ld.steps[1].ext) == std::vector<std::string>{"b2"});
  CHECK(names(s, ld.steps[2].ext) == std::vector<std::string>{"c1", "c2"});
  CHECK(names(s, ld.steps[2].base) == std::vector<std::string>{"b1", "b2"});
  for (std::size_t t = 0; t < ld.steps.size(); ++t) {
    CHECK(is_primitive(s, ld.steps[t].ext, ld.chain[t]));
    CHECK((ld.chain[t + 1] & ~(ld.chain[t] | ld.steps[t].ext)) == 0);
  }
}

TEST_CASE("decomposition errors") {
  const Structure of = fixture_structure("overlap-flowers");
  CHECK(code_of([&] { linear_decompose(of, of.base_set()); }) == Errc::NotStrongBase);

  const Structure stuck = parse("flavor: hypergraph\npoints: a b\nbase: a\n");
  CHECK(code_of([&] { linear_decompose(stuck, stuck.base_set()); }) == Errc::Stuck);
  CHECK(code_of([&] {
          tree_decompose(stuck, stuck.base_set(), StabilizerKind::Pointwise);
        }) == Errc::NotNormal);

  CHECK(code_of([&] {
          tree_decompose(of, of.base_set(), StabilizerKind::Pointwise);
        }) == Errc::DependentBase);
}

TEST_CASE("adjacent steps reorder when the hypothesis allows") {
  const Structure s = fixture_structure("examp2");
  const LinearDecomposition ld = linear_decompose(s, s.base_set());
  REQUIRE(ld.steps.size() == 3);
  CHECK(names(s, ld.steps[0].ext) == std::vector<std::string>{"c1", "c2", "c3"});

  const LinearDecomposition swapped = reorder(ld, 0);
  CHECK(names(s, swapped.steps[0].ext) == std::vector<std::string>{"d1", "d2", "d3"});
  CHECK(names(s, swapped.steps[1].ext) == std::vector<std::string>{"c1", "c2", "c3"});
  CHECK(swapped.chain.back() == s.all());
  CHECK((swapped.chain[1] & ~(s.base_set() | swapped.steps[0].ext)) == 0);

  // The greek block needs both c2 and d2; it cannot move before the d block.
  CHECK(code_of([&] { reorder(ld, 1); }) == Errc::IllegalSwap);
  CHECK_THROWS_AS(reorder(ld, 2), std::invalid_argument);
  CHECK_THROWS_AS(reorder(ld, -1), std::invalid_argument);
}

TEST_CASE("strata and petals of the flat two-stratum tree") {
  const Structure s = fixture_structure("examp1");
  const MuFunction mu = fixture_mu("examp1");
  const TreeDecomposition td =
      tree_decompose(s, s.base_set(), StabilizerKind::Pointwise, &mu);
  CHECK(td.root == s.base_set());
  CHECK(td.height == 2);
  REQUIRE(td.zero_parts.size() == 3);
  CHECK(td.zero_parts[0] == 0);
  CHECK(names(s, td.zero_parts[1]) == std::vector<std::string>{"a1"});
  CHECK(names(s, td.zero_parts[2]) == std::vector<std::string>{"a2"});
  REQUIRE(td.strata.size() == 3);
  CHECK(td.strata[0] == s.base_set());
  CHECK(td.strata[2] == s.all());
  REQUIRE(td.petals.size() == 3);
  CHECK_FALSE(td.petals[0].linear_cluster);
  // Hypergraph petals form singleton star groups.
  CHECK(td.star_partition ==
        std::vector<std::vector<int>>{{0}, {1}, {2}});
  REQUIRE(td.clusters.size() == 2);
  CHECK(td.j_classes == std::vector<std::vector<int>>{{0}, {1}});
}

TEST_CASE("single points on a shared line form one linear cluster") {
  const Structure s = fixture_structure("alpha-line-4");
  const MuFunction mu = fixture_mu("alpha-line-4");
  const TreeDecomposition td =
      tree_decompose(s, s.base_set(), StabilizerKind::Pointwise, &mu);
  CHECK(td.height == 1);
  REQUIRE(td.petals.size() == 2);
  for (const Petal& p : td.petals) {
    CHECK(p.linear_cluster);
    CHECK(p.stratum == 1);
    CHECK(popcount(p.line) == 4);
    CHECK(names(s, p.base) == std::vector<std::string>{"a1", "a2"});
  }
  CHECK(td.star_partition == std::vector<std::vector<int>>{{0, 1}});
  REQUIRE(td.clusters.size() == 1);
  CHECK(td.clusters[0].ell == 2);
  CHECK(td.clusters[0].nu == 0);
  REQUIRE(td.clusters[0].mu.has_value());
  CHECK(*td.clusters[0].mu == 2);
  CHECK(td.clusters[0].transitive);
}

TEST_CASE("clusters with a shared base fall into one j-class") {
  const Structure s = fixture_structure("overlap-flowers-2");
  const TreeDecomposition td =
      tree_decompose(s, s.base_set(), StabilizerKind::Setwise);
  REQUIRE(td.clusters.size() == 2);
  CHECK(td.clusters[0].base == s.base_set());
  CHECK(td.clusters[1].base == s.base_set());
  CHECK(td.j_classes == std::vector<std::vector<int>>{{0, 1}});
}

TEST_CASE("a petal is determined by a unique lower unit") {
  // c sits over {a1,b}; only the petal {b} meets that base above stratum 0.
  const Structure s = parse(
      "flavor: hypergraph\npoints: a1 a2 b c\n"
      "rel: a1 a2 b\nrel: a1 b c\nbase: a1 a2\n");
  const TreeDecomposition td =
      tree_decompose(s, s.base_set(), StabilizerKind::Pointwise);
  REQUIRE(td.petals.size() == 2);
  CHECK(td.petals[0].stratum == 1);
  CHECK(td.petals[1].stratum == 2);
  CHECK(td.height == 2);
  const auto unit = determines(td, 1);
  REQUIRE(unit.has_value());
  CHECK(*unit == 0);
  CHECK_THROWS_AS(determines(td, 0), std::invalid_argument);  // stratum 1
  CHECK_THROWS_AS(determines(td, 9), std::invalid_argument);

  // The greek petal of examp2 touches both lower blocks: not determined.
  const Structure e2 = fixture_structure("examp2");
  const TreeDecomposition t2 =
      tree_decompose(e2, e2.base_set(), StabilizerKind::Pointwise);
  REQUIRE(t2.petals.size() == 3);
  CHECK(t2.petals[2].stratum == 2);
  CHECK_FALSE(determines(t2, 2).has_value());
}

TEST_CASE("flowers collect petal images per base arrangement") {
  const Structure s = fixture_structure("overlap-flowers-2");
  const auto catalog = enumerate_good_pairs_all(s, 4);
  REQUIRE(catalog.size() == 4);
  const Bouquet bq = flowers_and_bouquet(s, catalog[0], s.base_set());
  CHECK(bq.A == catalog[0].A);
  CHECK(bq.B == catalog[0].B);
  REQUIRE(bq.flowers.size() == 2);

  const Flower& straight = bq.flowers[0];
  REQUIRE(straight.arrangement.size() == 2);
  CHECK(s.name(straight.arrangement[0]) == "b1");
  CHECK(s.name(straight.arrangement[1]) == "b2");
  REQUIRE(straight.petals.size() == 2);
  CHECK(names(s, straight.petals[0]) == std::vector<std::string>{"c11", "c12", "c13"});
  CHECK(names(s, straight.petals[1]) == std::vector<std::string>{"c21", "c22", "c23"});
  REQUIRE(straight.certificates.size() == 1);
  CHECK(straight.certificates[0].size() == 2);

  const Flower& crossed = bq.flowers[1];
  CHECK(s.name(crossed.arrangement[0]) == "b2");
  CHECK(s.name(crossed.arrangement[1]) == "b1");
  REQUIRE(crossed.petals.size() == 2);
  CHECK(names(s, crossed.petals[0]) == std::vector<std::string>{"d11", "d12", "d13"});
}
