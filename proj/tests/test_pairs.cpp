// Primitive extensions, good pairs, bound functions and packing numbers.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "smc/closure.hpp"
#include "smc/fixtures.hpp"
#include "smc/pairs.hpp"
#include "smc/predim.hpp"
#include "smc/search.hpp"
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

}  // namespace

TEST_CASE("self-sufficiency within a window") {
  const Structure s = fixture_structure("examp1");
  CHECK(is_strong_within(s, s.base_set(), s.all()));
  CHECK(is_strong_within(s, 0, s.all()));
  const Structure of = fixture_structure("overlap-flowers");
  CHECK_FALSE(is_strong_within(of, of.base_set(), of.all()));
  CHECK_THROWS_AS(is_strong_within(s, s.all(), s.base_set()), std::invalid_argument);
}

TEST_CASE("primitivity witnesses") {
  const Structure s = fixture_structure("examp1");
  const PointSet base = s.base_set();
  const PointSet b1 = s.set_of_names({"b1"});
  const PointSet bpair = s.set_of_names({"b1", "b2"});
  const PointSet cpair = s.set_of_names({"c1", "c2"});

  CHECK(is_primitive(s, b1, base));
  CHECK(is_primitive(s, cpair, bpair));

  const auto split = is_primitive(s, bpair, base);
  CHECK_FALSE(split);
  REQUIRE(split.intermediate.has_value());
  const PointSet mid = *split.intermediate;
  CHECK(popcount(mid) == 1);
  CHECK((mid & bpair) == mid);
  CHECK_FALSE(split.reason.empty());

  const auto off = is_primitive(s, s.set_of_names({"c1"}), base);
  CHECK_FALSE(off);
  CHECK_FALSE(off.intermediate.has_value());  // fails before the subset scan

  CHECK(code_of([&] { is_primitive(s, 0, base); }) == Errc::EmptyExtension);
  CHECK_THROWS_AS(is_primitive(s, b1, b1), std::invalid_argument);
}

TEST_CASE("base derivation") {
  const Structure s = fixture_structure("examp1");
  CHECK(find_base(s, s.set_of_names({"b1"}), s.base_set()) == s.base_set());
  CHECK(find_base(s, s.set_of_names({"c1", "c2"}), s.set_of_names({"b1", "b2"})) ==
        s.set_of_names({"b1", "b2"}));
  CHECK(code_of([&] {
          find_base(s, s.set_of_names({"b1", "b2"}), s.base_set());
        }) == Errc::NotPrimitive);

  // A single point of a long line takes the name-least two base points.
  const Structure al = fixture_structure("alpha-line-4");
  CHECK(find_base(al, al.set_of_names({"x1"}), al.set_of_names({"a1", "a2", "x2"})) ==
        al.set_of_names({"a1", "a2"}));

  const Structure st = fixture_structure("steiner-ce");
  const PointSet around = st.set_of_names({"c3", "gamma1", "gamma5", "d2"});
  CHECK(find_base(st, st.set_of_names({"alpha2"}), around) ==
        st.set_of_names({"c3", "gamma1"}));
}

TEST_CASE("extended bases read the supporting line") {
  const Structure st = fixture_structure("steiner-ce");
  const int alpha2 = st.index_of("alpha2");
  const PointSet around = st.set_of_names({"c3", "gamma1", "gamma5", "d2"});
  CHECK(st.names_of(extended_base(st, alpha2, around)) ==
        std::vector<std::string>{"c3", "gamma1", "gamma5"});

  // Two supporting lines at once: the query is refused as ambiguous.
  const PointSet both = st.set_of_names({"c3", "gamma1", "d3", "delta1"});
  CHECK(code_of([&] { extended_base(st, alpha2, both); }) == Errc::Ambiguous);

  // No supporting line.
  CHECK(code_of([&] {
          extended_base(st, st.index_of("alpha1"), st.set_of_names({"c3", "d2"}));
        }) == Errc::NotAlphaPoint);

  // Hypergraph points have no lines at all.
  const Structure e1 = fixture_structure("examp1");
  CHECK(code_of([&] {
          extended_base(e1, e1.index_of("b1"), e1.base_set());
        }) == Errc::NotAlphaPoint);
  CHECK_THROWS_AS(extended_base(st, alpha2, st.all()), std::invalid_argument);
}

TEST_CASE("good-pair catalogs match the recorded tables") {
  const Structure e1 = fixture_structure("examp1");
  const auto catalog = enumerate_good_pairs_all(e1, 4);
  REQUIRE(catalog.size() == 6);
  CHECK(e1.names_of(catalog[0].A) == std::vector<std::string>{"a1", "a2"});
  CHECK(e1.names_of(catalog[0].B) == std::vector<std::string>{"b1", "b2"});
  CHECK(catalog[0].kind == GoodPair::Kind::General);
  CHECK(e1.names_of(catalog[1].A) == std::vector<std::string>{"c1", "c2"});
  for (const auto& gp : catalog) {
    CHECK(gp.ambient == &e1);
    CHECK(connected_over_base(e1, gp.A, gp.B));
    CHECK(is_primitive(e1, gp.A, gp.B));
  }

  // Single points on the designated line are the alpha kind.
  const Structure al = fixture_structure("alpha-line-4");
  for (const auto& gp : enumerate_good_pairs_all(al, 4)) {
    CHECK(popcount(gp.A) == 1);
    CHECK(gp.kind == GoodPair::Kind::Alpha);
  }

  CHECK(enumerate_good_pairs_all(fixture_structure("examp2"), 4).empty());
  CHECK_THROWS_AS(enumerate_good_pairs_all(e1, 0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_good_pairs_all(e1, 7), std::invalid_argument);
}

TEST_CASE("pair copies and packing numbers") {
  const Structure s = fixture_structure("examp1");
  const PointSet bpair = s.set_of_names({"b1", "b2"});
  const auto copies = copies_over_base(s, s.set_of_names({"c1", "c2"}), bpair);
  REQUIRE(copies.size() == 2);
  CHECK(s.names_of(copies[0]) == std::vector<std::string>{"a1", "a2"});
  CHECK(s.names_of(copies[1]) == std::vector<std::string>{"c1", "c2"});
  CHECK(chi(s, s.set_of_names({"c1", "c2"}), bpair) == 2);
  CHECK_THROWS_AS(copies_over_base(s, bpair, bpair), std::invalid_argument);

  const std::vector<PointSet> sets = {0b0011, 0b0110, 0b1100};
  CHECK(max_disjoint_count(sets) == 2);
  const auto families = maximal_disjoint_families(sets);
  REQUIRE(families.size() == 2);
  CHECK(families[0] == std::vector<PointSet>{0b0011, 0b1100});
  CHECK(families[1] == std::vector<PointSet>{0b0110});
  CHECK(max_disjoint_count({}) == 0);
}

TEST_CASE("pair codes distinguish shapes and survive size overflow") {
  const Structure st = fixture_structure("steiner-ce");
  const PointSet rest = st.all() & ~st.base_set();
  const CanonCode big = pair_code(st, rest, st.base_set());
  REQUIRE_FALSE(big.bytes.empty());
  CHECK(big.bytes[0] == '!');  // beyond the canonization cap: sentinel form
  const CanonCode big2 = pair_code(st, st.all() & ~st.set_of_names({"a1"}),
                                   st.set_of_names({"a1"}));
  CHECK(big != big2);

  const Structure e1 = fixture_structure("examp1");
  const CanonCode small = pair_code(e1, e1.set_of_names({"a1", "a2"}),
                                    e1.set_of_names({"b1", "b2"}));
  CHECK(small.bytes[0] != '!');
  CHECK(from_hex(to_hex(small)) == small);
}

TEST_CASE("bound-function files parse, resolve and round-trip") {
  const MuFunction plain = MuFunction::parse("alpha: 2\ndefault: delta\n");
  REQUIRE(plain.alpha_value.has_value());
  CHECK(*plain.alpha_value == 2);
  REQUIRE(plain.default_rule.has_value());
  CHECK(plain.default_rule->first == MuFunction::DefaultKind::DeltaOfBase);

  const Structure e1 = fixture_structure("examp1");
  // Alpha rule: a related single point over a 2-point base.
  CHECK(plain.value(e1, e1.set_of_names({"b1"}), e1.base_set()) == 2);
  // Default rule: multi-point extensions fall back to delta of the base.
  CHECK(plain.value(e1, e1.set_of_names({"a1", "a2"}),
                    e1.set_of_names({"b1", "b2"})) == 2);
  // A 1-point base dodges the alpha rule in the hypergraph flavor.
  CHECK(plain.value(e1, e1.set_of_names({"b1"}), e1.set_of_names({"a1"})) == 1);

  const MuFunction shifted = MuFunction::parse("default: delta+1  # comment\n");
  CHECK(shifted.value(e1, e1.all() & ~e1.base_set(), e1.base_set()) == 3);
  CHECK(MuFunction::parse(shifted.serialize()).default_rule == shifted.default_rule);

  // Explicit per-code entries win over every other rule.
  const Structure al = fixture_structure("alpha-line-4");
  const PointSet x1 = al.set_of_names({"x1"});
  const PointSet ab = al.set_of_names({"a1", "a2"});
  const std::string hex = to_hex(pair_code(al, x1, ab));
  const MuFunction pinned =
      MuFunction::parse("pair: " + hex + " 7\nalpha: 2\ndefault: delta\n");
  CHECK(pinned.value(al, x1, ab) == 7);
  // x2 over the base is automorphic to x1 over the base, so it carries the
  // same code and the explicit entry covers it too.
  CHECK(pinned.value(al, al.set_of_names({"x2"}), ab) == 7);
  // A differently shaped pair misses the entry and falls back to alpha.
  CHECK(pinned.value(al, al.set_of_names({"x2"}), al.set_of_names({"a1"})) == 2);
  const MuFunction reparsed = MuFunction::parse(pinned.serialize());
  CHECK(reparsed.explicit_codes == pinned.explicit_codes);
  CHECK(reparsed.alpha_value == pinned.alpha_value);

  const MuFunction empty = MuFunction::parse("# nothing\n");
  CHECK(code_of([&] { empty.value(e1, e1.set_of_names({"b1"}), e1.base_set()); }) ==
        Errc::UnresolvedCode);

  CHECK(code_of([] { MuFunction::parse("alpha: 0\n"); }) == Errc::ParseError);
  CHECK(code_of([] { MuFunction::parse("default: twice-delta\n"); }) == Errc::ParseError);
  CHECK(code_of([] { MuFunction::parse("volume: 11\n"); }) == Errc::ParseError);
  CHECK(code_of([] { MuFunction::parse("no colon here\n"); }) == Errc::ParseError);
}

TEST_CASE("mu-class membership checks") {
  const Structure al = fixture_structure("alpha-line-4");
  CHECK(in_Lmu(al, fixture_mu("alpha-line-4"), 4).ok);

  const MuFunction strict = MuFunction::parse("alpha: 1\ndefault: delta\n");
  const LmuReport rep = in_Lmu(al, strict, 4);
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.violations.size() == 4);
  CHECK(rep.violations[0].chi_value == 2);
  CHECK(rep.violations[0].mu_bound == 1);

  const Structure k4 = fixture_structure("k4-design");
  CHECK(in_Lmu(k4, fixture_mu("k4-design"), 4).ok);
  const LmuReport bare = in_Lmu(k4, MuFunction::parse("default: delta\n"), 4);
  CHECK_FALSE(bare.ok);
  REQUIRE(bare.violations.size() == 1);
  CHECK(bare.violations[0].chi_value == 1);
  CHECK(bare.violations[0].mu_bound == 0);
}

TEST_CASE("the triples condition on catalogs and on rules") {
  const Structure e1 = fixture_structure("examp1");
  CHECK_FALSE(mu_triples(fixture_mu("examp1"), enumerate_good_pairs_all(e1, 4)));

  const Structure k4 = fixture_structure("k4-design");
  CHECK(mu_triples(fixture_mu("k4-design"), enumerate_good_pairs_all(k4, 4)));

  // Extensions along one line are exempt in the linear flavor.
  const Structure al = fixture_structure("alpha-line-4");
  GoodPair linear_pair;
  linear_pair.ambient = &al;
  linear_pair.A = al.set_of_names({"x1", "x2"});
  linear_pair.B = al.set_of_names({"a1", "a2"});
  CHECK(mu_triples(fixture_mu("alpha-line-4"), {linear_pair}));

  CHECK(mu_triples(MuFunction::parse("alpha: 3\ndefault: delta+1\n")));
  CHECK(mu_triples(MuFunction::parse("default: delta+1\n")));
  CHECK(mu_triples(MuFunction::parse("default: delta+4\n")));
  CHECK_FALSE(mu_triples(MuFunction::parse("alpha: 2\ndefault: delta\n")));
  CHECK_FALSE(mu_triples(MuFunction::parse("alpha: 3\n")));

  const Structure e1b = fixture_structure("examp1");
  const std::string hex = to_hex(pair_code(e1b, e1b.set_of_names({"a1", "a2"}),
                                           e1b.set_of_names({"b1", "b2"})));
  CHECK_FALSE(mu_triples(
      MuFunction::parse("pair: " + hex + " 2\ndefault: delta+1\n")));
}

TEST_CASE("connectivity over a base") {
  const Structure s = fixture_structure("examp1");
  CHECK(connected_over_base(s, s.set_of_names({"c1", "c2"}),
                            s.set_of_names({"b1", "b2"})));
  CHECK_FALSE(connected_over_base(s, s.set_of_names({"b1", "b2"}), s.base_set()));
  CHECK(connected_over_base(s, s.set_of_names({"b1"}), 0));
}
