#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "smc/error.hpp"
#include "smc/fixtures.hpp"
#include "smc/structure.hpp"

using namespace smc;

namespace {

bool throws_code(Errc want, const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.code() == want;
  }
  return false;
}

}  // namespace

TEST_CASE("point-set helpers") {
  const PointSet s = point_bit(0) | point_bit(3) | point_bit(5);
  CHECK(popcount(s) == 3);
  CHECK(first_point(s) == 0);
  CHECK(contains(s, 3));
  CHECK_FALSE(contains(s, 1));
  CHECK(points_of(s) == std::vector<int>{0, 3, 5});
}

TEST_CASE("parsing a small hypergraph") {
  const Structure s = parse(
      "flavor: hypergraph\n"
      "points: a b c d  # trailing comment\n"
      "rel: a b c\n"
      "rel: b c d\n"
      "base: a b\n");
  CHECK(s.flavor() == Flavor::Hypergraph);
  CHECK(s.n() == 4);
  CHECK(s.triples().size() == 2);
  CHECK(s.index_of("c") == 2);
  CHECK(s.base() == std::vector<int>{0, 1});
  CHECK(s.base_set() == (point_bit(0) | point_bit(1)));
  CHECK(s.has_triple(point_bit(0) | point_bit(1) | point_bit(2)));
  CHECK_FALSE(s.has_triple(point_bit(0) | point_bit(1) | point_bit(3)));
  CHECK(s.format_set(s.base_set()) == "{a,b}");
}

TEST_CASE("parse errors carry their codes") {
  CHECK(throws_code(Errc::ParseError, "points: a b\n"));
  CHECK(throws_code(Errc::ParseError, "flavor: hypergraph\n"));
  CHECK(throws_code(Errc::ParseError,
                    "flavor: nonsense\npoints: a b c\n"));
  CHECK(throws_code(Errc::UnknownPoint,
                    "flavor: hypergraph\npoints: a b c\nrel: a b z\n"));
  CHECK(throws_code(Errc::DuplicateTriplePoint,
                    "flavor: hypergraph\npoints: a b c\nrel: a a b\n"));
  CHECK(throws_code(Errc::ParseError,
                    "flavor: hypergraph\npoints: a b c\nrel: a b c\nrel: c b a\n"));
  CHECK(throws_code(
      Errc::LinearityViolation,
      "flavor: linear\npoints: a b c d\nrel: a b c\nrel: a b d\n"));
}

TEST_CASE("serialize round-trips every fixture") {
  for (const FixtureInfo& fi : fixture_registry()) {
    const Structure s = fixture_structure(fi.name);
    CHECK(parse(serialize(s)) == s);
  }
}

TEST_CASE("fixture sizes") {
  struct Row {
    const char* name;
    int n, t;
  };
  const Row rows[] = {
      {"examp1", 6, 4},          {"examp2", 14, 12},
      {"examp2-sym", 26, 24},    {"steiner-ce", 22, 28},
      {"overlap-flowers", 21, 21}, {"overlap-flowers-2", 14, 12},
      {"k4-design", 4, 4},       {"alpha-line-3", 3, 1},
      {"alpha-line-4", 4, 4},    {"alpha-line-5", 5, 10},
  };
  for (const Row& r : rows) {
    const Structure s = fixture_structure(r.name);
    CHECK_MESSAGE(s.n() == r.n, r.name);
    CHECK_MESSAGE(static_cast<int>(s.triples().size()) == r.t, r.name);
  }
}

TEST_CASE("full lines of the Steiner fixture") {
  const Structure s = fixture_structure("steiner-ce");
  const auto& lines = s.full_lines();
  REQUIRE(lines.size() == 16);
  std::vector<std::vector<std::string>> got;
  for (PointSet ln : lines) got.push_back(s.names_of(ln));
  std::sort(got.begin(), got.end());
  int length4 = 0;
  for (const auto& ln : got)
    if (ln.size() == 4) ++length4;
  CHECK(length4 == 4);
  const std::vector<std::vector<std::string>> want4 = {
      {"a2", "c1", "c3", "c5"},
      {"a2", "d1", "d3", "d5"},
      {"alpha2", "c3", "gamma1", "gamma5"},
      {"alpha2", "d3", "delta1", "delta5"}};
  std::vector<std::vector<std::string>> got4;
  for (const auto& ln : got)
    if (ln.size() == 4) got4.push_back(ln);
  CHECK(got4 == want4);
}

TEST_CASE("degrees in the second worked example") {
  const Structure s = fixture_structure("examp2");
  CHECK(s.degree_within(s.index_of("alpha2"), s.all()) == 4);
  CHECK(s.degree_within(s.index_of("alpha1"), s.all()) == 2);
  CHECK(s.degree_within(s.index_of("gamma1"), s.all()) == 2);
}

TEST_CASE("induced substructures remap points in order") {
  const Structure s = fixture_structure("examp1");
  const PointSet mask = s.set_of_names({"a1", "a2", "b1"});
  std::vector<int> remap;
  const Structure sub = induced(s, mask, &remap);
  CHECK(sub.n() == 3);
  CHECK(sub.names() == std::vector<std::string>{"a1", "a2", "b1"});
  CHECK(sub.triples().size() == 1);
  CHECK(remap[s.index_of("a1")] == 0);
  CHECK(remap[s.index_of("b1")] == 2);
  CHECK(remap[s.index_of("c1")] == -1);
}

TEST_CASE("lines within a subset") {
  const Structure s = fixture_structure("steiner-ce");
  const PointSet within = s.set_of_names({"a2", "c1", "c3", "d1"});
  const auto lines = lines_within(s, within);
  REQUIRE(lines.size() == 1);
  CHECK(s.names_of(lines[0]) == std::vector<std::string>{"a2", "c1", "c3"});
}
