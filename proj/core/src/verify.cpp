#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "smc/amalgam.hpp"
#include "smc/closure.hpp"
#include "smc/decomp.hpp"
#include "smc/definability.hpp"
#include "smc/fixtures.hpp"
#include "smc/pairs.hpp"
#include "smc/predim.hpp"
#include "smc/search.hpp"
#include "smc/structure.hpp"

namespace smc {

namespace {

using Names = std::vector<std::string>;

std::string join(const Names& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += v[i];
  }
  return out + "}";
}

struct Checker {
  const Structure& s;
  FixtureReport rep;

  explicit Checker(const Structure& st, std::string name) : s(st) {
    rep.name = std::move(name);
  }

  void log(const std::string& label, bool pass, std::string detail) {
    rep.checks.push_back({label, pass, std::move(detail)});
    if (!pass) rep.all_pass = false;
  }

  void eq_int(const std::string& label, long long got, long long want) {
    std::ostringstream d;
    d << "expected " << want << ", got " << got;
    log(label, got == want, d.str());
  }

  void is_true(const std::string& label, bool got) {
    log(label, got, got ? "holds" : "fails");
  }

  void eq_set(const std::string& label, PointSet got, const Names& want) {
    const Names gn = s.names_of(got);
    log(label, gn == want, "expected " + join(want) + ", got " + join(gn));
  }

  void eq_sets(const std::string& label, const std::vector<PointSet>& got,
               const std::vector<Names>& want) {
    bool ok = got.size() == want.size();
    if (ok)
      for (std::size_t i = 0; i < got.size(); ++i)
        if (s.names_of(got[i]) != want[i]) ok = false;
    std::string d = "expected " + std::to_string(want.size()) +
                    " sets, got " + std::to_string(got.size());
    log(label, ok, d);
  }

  void eq_verdict(const std::string& label, Verdict got, Verdict want) {
    log(label, got == want,
        std::string("expected ") + verdict_name(want) + ", got " +
            verdict_name(got));
  }

  PointSet set(const Names& names) const { return s.set_of_names(names); }
};

bool moved_by(const std::vector<Perm>& G, int e) {
  for (const Perm& g : G)
    if (g[static_cast<std::size_t>(e)] != e) return true;
  return false;
}

bool set_invariant(const std::vector<Perm>& G, PointSet A) {
  for (const Perm& g : G) {
    PointSet img = 0;
    for_each_point(A, [&](int p) { img |= point_bit(g[static_cast<std::size_t>(p)]); });
    if (img != A) return false;
  }
  return true;
}

void check_chain(Checker& c, const LinearDecomposition& ld,
                 const std::vector<std::pair<Names, Names>>& want) {
  c.eq_int("chain: step count", static_cast<long long>(ld.steps.size()),
           static_cast<long long>(want.size()));
  for (std::size_t i = 0; i < want.size() && i < ld.steps.size(); ++i) {
    c.eq_set("chain: step " + std::to_string(i) + " adds", ld.steps[i].ext,
             want[i].first);
    c.eq_set("chain: step " + std::to_string(i) + " base", ld.steps[i].base,
             want[i].second);
  }
}

struct ClusterWant {
  int stratum;
  Names base;
  std::vector<Names> petals;
  int ell, nu, mu;
};

void check_tree(Checker& c, const TreeDecomposition& td, int height,
                const std::vector<Names>& strata,
                const std::vector<ClusterWant>& clusters) {
  c.eq_int("tree: height", td.height, height);
  c.eq_int("tree: stratum count", static_cast<long long>(td.strata.size()),
           static_cast<long long>(strata.size()));
  for (std::size_t i = 0; i < strata.size() && i < td.strata.size(); ++i)
    c.eq_set("tree: stratum " + std::to_string(i), td.strata[i], strata[i]);
  c.eq_int("tree: cluster count", static_cast<long long>(td.clusters.size()),
           static_cast<long long>(clusters.size()));
  for (std::size_t i = 0; i < clusters.size() && i < td.clusters.size(); ++i) {
    const Cluster& got = td.clusters[i];
    const ClusterWant& want = clusters[i];
    const std::string tag = "tree: cluster " + std::to_string(i) + " ";
    c.eq_int(tag + "stratum", got.stratum, want.stratum);
    c.eq_set(tag + "base", got.base, want.base);
    c.eq_sets(tag + "petal sets", got.petals, want.petals);
    for (std::size_t j = 0; j < want.petals.size() && j < got.petals.size(); ++j)
      c.eq_set(tag + "petal " + std::to_string(j), got.petals[j], want.petals[j]);
    c.eq_int(tag + "petal count", got.ell, want.ell);
    c.eq_int(tag + "embedded copies below", got.nu, want.nu);
    c.eq_int(tag + "bound", got.mu.value_or(-1), want.mu);
    c.is_true(tag + "petal-count-plus-copies law", got.ell + got.nu == want.mu);
    c.is_true(tag + "stabilizer transitive on petals", got.transitive);
  }
}

void check_good_pairs(Checker& c, const Structure& s, const MuFunction& mu,
                      int max_ext,
                      const std::vector<std::tuple<Names, Names, int, int>>& want) {
  const std::vector<GoodPair> pairs = enumerate_good_pairs_all(s, max_ext);
  c.eq_int("good pairs: count", static_cast<long long>(pairs.size()),
           static_cast<long long>(want.size()));
  for (std::size_t i = 0; i < want.size() && i < pairs.size(); ++i) {
    const auto& [wa, wb, wchi, wmu] = want[i];
    const std::string tag = "good pair " + std::to_string(i) + ": ";
    c.eq_set(tag + "extension", pairs[i].A, wa);
    c.eq_set(tag + "base", pairs[i].B, wb);
    c.eq_int(tag + "multiplicity", chi(s, pairs[i]), wchi);
    c.eq_int(tag + "bound", mu.value(s, pairs[i].A, pairs[i].B), wmu);
  }
  c.is_true("mu bound holds everywhere", in_Lmu(s, mu, max_ext).ok);
}

// ---------------------------------------------------------------------------
// per-fixture verifiers

void verify_examp1(Checker& c) {
  const Structure& s = c.s;
  const MuFunction mu = fixture_mu("examp1");
  DimOracle dq(s);
  const PointSet I = s.base_set();

  c.eq_int("point count", s.n(), 6);
  c.eq_int("relation count", static_cast<long long>(s.triples().size()), 4);
  c.eq_int("predimension of the whole", delta(s, s.all()), 2);
  c.eq_int("predimension of the base", delta(s, I), 2);
  c.eq_int("dimension of the base", dq.dim(I), 2);
  c.eq_int("dimension of the empty set", dq.dim(0), 0);
  c.eq_int("dimension of c1", dq.dim(c.set({"c1"})), 1);
  c.is_true("base is self-sufficient", dq.is_strong(I));

  const auto Gall = automorphisms(s);
  const auto Gpw = automorphisms(s, I);
  const auto Gsw = automorphisms(s, PointSet{0}, std::vector<PointSet>{I});
  c.eq_int("automorphism count", static_cast<long long>(Gall.size()), 16);
  c.eq_int("base-fixing automorphism count", static_cast<long long>(Gpw.size()), 4);
  c.eq_int("base-preserving automorphism count", static_cast<long long>(Gsw.size()), 8);
  c.eq_set("fixed points, base fixed", fixed_points(s, Gpw), {"a1", "a2"});
  c.eq_set("fixed points, base preserved", fixed_points(s, Gsw), {});
  c.eq_sets("orbits under the base-fixing group", orbits(s, Gpw),
            {{"a1"}, {"a2"}, {"b1", "b2"}, {"c1", "c2"}});
  c.is_true("c-pair invariant under the base-preserving group",
            set_invariant(Gsw, c.set({"c1", "c2"})));

  c.eq_set("closure of c1", icl(s, c.set({"c1"})).closure, {"c1"});
  c.eq_set("closure of {a1,a2,b1,c1}",
           icl(s, c.set({"a1", "a2", "b1", "c1"})).closure,
           {"a1", "a2", "b1", "b2", "c1", "c2"});
  c.eq_set("algebraic trace of the base", dq.acl_trace(I),
           {"a1", "a2", "b1", "b2", "c1", "c2"});
  c.eq_set("algebraic trace of the empty set", dq.acl_trace(0), {});

  check_good_pairs(c, s, mu, 4,
                   {{{"a1", "a2"}, {"b1", "b2"}, 2, 2},
                    {{"c1", "c2"}, {"b1", "b2"}, 2, 2},
                    {{"a1", "b1", "b2", "c1"}, {"a2", "c2"}, 1, 2},
                    {{"a1", "b1", "b2", "c2"}, {"a2", "c1"}, 1, 2},
                    {{"a2", "b1", "b2", "c1"}, {"a1", "c2"}, 1, 2},
                    {{"a2", "b1", "b2", "c2"}, {"a1", "c1"}, 1, 2}});
  c.eq_int("c-pair multiplicity over the b-pair",
           chi(s, c.set({"c1", "c2"}), c.set({"b1", "b2"})), 2);

  check_chain(c, linear_decompose(s, I),
              {{{"b1"}, {"a1", "a2"}},
               {{"b2"}, {"a1", "a2"}},
               {{"c1", "c2"}, {"b1", "b2"}}});
  check_tree(c, tree_decompose(s, I, StabilizerKind::Pointwise, &mu), 2,
             {{"a1", "a2"},
              {"a1", "a2", "b1", "b2"},
              {"a1", "a2", "b1", "b2", "c1", "c2"}},
             {{1, {"a1", "a2"}, {{"b1"}, {"b2"}}, 2, 0, 2},
              {2, {"b1", "b2"}, {{"c1", "c2"}}, 1, 1, 2}});

  const DclstarReport dr = classify_dclstar(s, I, fixture_certificate("examp1"));
  for (int p = 0; p < s.n(); ++p)
    c.eq_verdict("definable-closure-star verdict for " + s.name(p),
                 dr.dclstar[static_cast<std::size_t>(p)], Verdict::No);
}

void verify_examp2(Checker& c) {
  const Structure& s = c.s;
  const MuFunction mu = fixture_mu("examp2");
  DimOracle dq(s);
  const PointSet I = s.base_set();

  c.eq_int("point count", s.n(), 14);
  c.eq_int("relation count", static_cast<long long>(s.triples().size()), 12);
  c.eq_int("predimension of the whole", delta(s, s.all()), 2);
  c.eq_int("predimension of the base", delta(s, I), 2);
  c.is_true("base is self-sufficient", dq.is_strong(I));

  const auto Gall = automorphisms(s);
  const auto Gpw = automorphisms(s, I);
  const auto Gsw = automorphisms(s, PointSet{0}, std::vector<PointSet>{I});
  c.eq_int("automorphism count", static_cast<long long>(Gall.size()), 64);
  c.eq_int("base-fixing automorphism count", static_cast<long long>(Gpw.size()), 32);
  c.eq_int("base-preserving automorphism count", static_cast<long long>(Gsw.size()), 32);
  c.eq_set("fixed points, base fixed", fixed_points(s, Gpw),
           {"a1", "a2", "alpha1", "alpha2"});
  c.eq_set("fixed points, base preserved", fixed_points(s, Gsw),
           {"a1", "a2", "alpha1", "alpha2"});
  c.eq_sets("orbits under the base-fixing group", orbits(s, Gpw),
            {{"a1"},
             {"a2"},
             {"c1", "c3", "d1", "d3"},
             {"c2", "d2"},
             {"alpha1"},
             {"alpha2"},
             {"delta1", "delta3", "gamma1", "gamma3"}});

  c.eq_int("good pairs at width 4",
           static_cast<long long>(enumerate_good_pairs_all(s, 4).size()), 0);
  c.is_true("mu bound holds everywhere", in_Lmu(s, mu, 4).ok);

  // The second-level petal and its distinguished point.
  const PointSet petal =
      c.set({"alpha1", "alpha2", "gamma1", "gamma3", "delta1", "delta3"});
  Names four;
  for_each_point(petal, [&](int p) {
    if (s.degree_within(p, s.all()) == 4) four.push_back(s.name(p));
  });
  c.log("unique petal point in four relations", four == Names{"alpha2"},
        "expected {alpha2}, got " + join(four));
  c.eq_int("relations through alpha1",
           s.degree_within(s.index_of("alpha1"), s.all()), 2);
  c.is_true("petal invariant under the base-fixing group",
            set_invariant(Gpw, petal));

  {
    std::vector<PointSet> copies =
        copies_over_base(s, c.set({"c1", "c2", "c3"}), I);
    c.eq_sets("images of the first petal over the base", copies,
              {{"c1", "c2", "c3"}, {"d1", "d2", "d3"}});
    std::vector<int> remap;
    Structure sub = induced(s, c.set({"c1", "c2", "c3"}) | I, &remap);
    std::vector<std::pair<int, int>> fixed;
    for_each_point(I, [&](int p) { fixed.emplace_back(remap[p], p); });
    c.eq_int("embeddings of the first petal pair",
             static_cast<long long>(embeddings(sub, s, fixed).size()), 4);
  }

  const int alpha2 = s.index_of("alpha2");
  c.is_true("alpha2 moved when nothing is fixed", moved_by(Gall, alpha2));
  c.is_true("alpha2 fixed when a1 is fixed",
            !moved_by(automorphisms(s, c.set({"a1"})), alpha2));
  c.is_true("alpha2 fixed when a2 is fixed",
            !moved_by(automorphisms(s, c.set({"a2"})), alpha2));
  c.eq_int("dimension of a1", dq.dim(c.set({"a1"})), 1);
  c.eq_int("dimension of {a1, alpha2}", dq.dim(c.set({"a1", "alpha2"})), 2);

  c.eq_int("c-block multiplicity over the base",
           chi(s, c.set({"c1", "c2", "c3"}), I), 2);
  c.eq_int("petal multiplicity over {c2,d2}",
           chi(s, petal, c.set({"c2", "d2"})), 2);

  check_chain(c, linear_decompose(s, I),
              {{{"c1", "c2", "c3"}, {"a1", "a2"}},
               {{"d1", "d2", "d3"}, {"a1", "a2"}},
               {{"alpha1", "alpha2", "delta1", "delta3", "gamma1", "gamma3"},
                {"c2", "d2"}}});
  check_tree(
      c, tree_decompose(s, I, StabilizerKind::Pointwise, &mu), 2,
      {{"a1", "a2"},
       {"a1", "a2", "c1", "c2", "c3", "d1", "d2", "d3"},
       {"a1", "a2", "alpha1", "alpha2", "c1", "c2", "c3", "d1", "d2", "d3",
        "delta1", "delta3", "gamma1", "gamma3"}},
      {{1, {"a1", "a2"}, {{"c1", "c2", "c3"}, {"d1", "d2", "d3"}}, 2, 0, 2},
       {2,
        {"c2", "d2"},
        {{"alpha1", "alpha2", "delta1", "delta3", "gamma1", "gamma3"}},
        1,
        1,
        2}});

  const DclstarReport dr = classify_dclstar(s, I, fixture_certificate("examp2"));
  for (int p = 0; p < s.n(); ++p) {
    const std::string nm = s.name(p);
    const Verdict want = (nm == "alpha1" || nm == "alpha2") ? Verdict::Yes
                                                            : Verdict::No;
    c.eq_verdict("definable-closure-star verdict for " + nm,
                 dr.dclstar[static_cast<std::size_t>(p)], want);
    const Verdict wants =
        (nm == "a1" || nm == "a2" || nm == "alpha1" || nm == "alpha2")
            ? Verdict::Undetermined
            : Verdict::No;
    c.eq_verdict("symmetric-closure-star verdict for " + nm,
                 dr.sdclstar[static_cast<std::size_t>(p)], wants);
  }
}

void verify_examp2_sym(Checker& c) {
  const Structure& s = c.s;
  DimOracle dq(s);
  const PointSet I = s.base_set();

  c.eq_int("point count", s.n(), 26);
  c.eq_int("relation count", static_cast<long long>(s.triples().size()), 24);
  c.eq_int("predimension of the whole", delta(s, s.all()), 2);
  c.eq_int("dimension of the base", dq.dim(I), 2);
  c.is_true("base is self-sufficient", dq.is_strong(I));

  const auto Gpw = automorphisms(s, I);
  const auto Gsw = automorphisms(s, PointSet{0}, std::vector<PointSet>{I});
  c.eq_int("base-fixing automorphism count",
           static_cast<long long>(Gpw.size()), 1024);
  c.eq_int("base-preserving automorphism count",
           static_cast<long long>(Gsw.size()), 2048);
  c.eq_set("fixed points, base fixed", fixed_points(s, Gpw),
           {"a1", "a2", "alpha1", "alpha1p", "alpha2", "alpha2p"});
  c.eq_set("fixed points, base preserved", fixed_points(s, Gsw), {});

  bool swap_realized = false;
  const int a1 = s.index_of("a1"), a2 = s.index_of("a2");
  for (const Perm& g : Gsw)
    if (g[static_cast<std::size_t>(a1)] == a2) swap_realized = true;
  c.is_true("base swap realized by the base-preserving group", swap_realized);
  c.is_true("alpha2 moved by the base-preserving group",
            moved_by(Gsw, s.index_of("alpha2")));

  c.eq_int("dimension of a1", dq.dim(c.set({"a1"})), 1);
  c.eq_int("dimension of {a1, alpha2}", dq.dim(c.set({"a1", "alpha2"})), 2);

  const DclstarReport dr =
      classify_dclstar(s, I, fixture_certificate("examp2-sym"));
  for (const char* nm : {"alpha1", "alpha2", "alpha1p", "alpha2p"})
    c.eq_verdict(std::string("definable-closure-star verdict for ") + nm,
                 dr.dclstar[static_cast<std::size_t>(s.index_of(nm))],
                 Verdict::Yes);
  c.eq_verdict("symmetric-closure-star verdict for alpha2",
               dr.sdclstar[static_cast<std::size_t>(s.index_of("alpha2"))],
               Verdict::No);
}

void verify_steiner_ce(Checker& c) {
  const Structure& s = c.s;
  const MuFunction mu = fixture_mu("steiner-ce");
  DimOracle dq(s);
  const PointSet I = s.base_set();

  c.eq_int("point count", s.n(), 22);
  c.eq_int("relation count", static_cast<long long>(s.triples().size()), 28);
  c.eq_int("predimension of the whole", delta(s, s.all()), 2);
  c.is_true("base is self-sufficient", dq.is_strong(I));

  const auto& lines = s.full_lines();
  c.eq_int("full line count", static_cast<long long>(lines.size()), 16);
  {
    int fours = 0;
    for (PointSet ln : lines)
      if (popcount(ln) == 4) ++fours;
    c.eq_int("length-4 line count", fours, 4);
  }
  const std::vector<Names> want_lines = {
      {"a1", "c1", "c2"},           {"a1", "c4", "c5"},
      {"a1", "d1", "d2"},           {"a1", "d4", "d5"},
      {"a2", "c1", "c3", "c5"},     {"a2", "d1", "d3", "d5"},
      {"alpha1", "delta1", "delta2"}, {"alpha1", "delta4", "delta5"},
      {"alpha1", "gamma1", "gamma2"}, {"alpha1", "gamma4", "gamma5"},
      {"alpha2", "c3", "gamma1", "gamma5"},
      {"alpha2", "d3", "delta1", "delta5"},
      {"c2", "c3", "c4"},           {"c3", "gamma2", "gamma4"},
      {"d2", "d3", "d4"},           {"d3", "delta2", "delta4"}};
  std::vector<Names> got_lines;
  for (PointSet ln : lines) got_lines.push_back(s.names_of(ln));
  std::sort(got_lines.begin(), got_lines.end());
  c.log("full line list", got_lines == want_lines, "line sets differ");

  const auto Gall = automorphisms(s);
  const auto Gpw = automorphisms(s, I);
  const auto Gsw = automorphisms(s, PointSet{0}, std::vector<PointSet>{I});
  c.eq_int("automorphism count", static_cast<long long>(Gall.size()), 64);
  c.eq_int("base-fixing automorphism count", static_cast<long long>(Gpw.size()), 32);
  c.eq_int("base-preserving automorphism count", static_cast<long long>(Gsw.size()), 32);
  c.eq_set("fixed points, base fixed", fixed_points(s, Gpw),
           {"a1", "a2", "alpha1", "alpha2"});
  c.eq_set("fixed points, base preserved", fixed_points(s, Gsw),
           {"a1", "a2", "alpha1", "alpha2"});

  c.eq_int("good pairs at width 4",
           static_cast<long long>(enumerate_good_pairs_all(s, 4).size()), 0);
  c.is_true("mu bound holds everywhere", in_Lmu(s, mu, 4).ok);

  const int alpha1 = s.index_of("alpha1");
  c.is_true("alpha1 moved when nothing is fixed", moved_by(Gall, alpha1));
  c.is_true("alpha1 fixed when a1 is fixed",
            !moved_by(automorphisms(s, c.set({"a1"})), alpha1));
  c.is_true("alpha1 fixed when a2 is fixed",
            !moved_by(automorphisms(s, c.set({"a2"})), alpha1));
  c.eq_int("dimension of a1", dq.dim(c.set({"a1"})), 1);
  c.eq_int("dimension of {a1, alpha1}", dq.dim(c.set({"a1", "alpha1"})), 2);
  c.eq_int("dimension of {a2, alpha1}", dq.dim(c.set({"a2", "alpha1"})), 2);

  const PointSet dblock = c.set({"d1", "d2", "d3", "d4", "d5"});
  const PointSet greek = c.set({"alpha1", "alpha2", "delta1", "delta2",
                                "delta4", "delta5", "gamma1", "gamma2",
                                "gamma4", "gamma5"});
  c.eq_int("d-block multiplicity over the base", chi(s, dblock, I), 2);
  c.eq_int("second-level block multiplicity over {c3,d3}",
           chi(s, greek, c.set({"c3", "d3"})), 2);
  // A point on a length-4 line has multiplicity 2 over a 2-point base of
  // that line.
  c.eq_int("alpha-point multiplicity on a length-4 line",
           chi(s, c.set({"c3"}), c.set({"a2", "c1"})), 2);

  check_chain(c, linear_decompose(s, I),
              {{{"c1", "c2", "c3", "c4", "c5"}, {"a1", "a2"}},
               {{"d1", "d2", "d3", "d4", "d5"}, {"a1", "a2"}},
               {{"alpha1", "alpha2", "delta1", "delta2", "delta4", "delta5",
                 "gamma1", "gamma2", "gamma4", "gamma5"},
                {"c3", "d3"}}});
  check_tree(
      c, tree_decompose(s, I, StabilizerKind::Pointwise, &mu), 2,
      {{"a1", "a2"},
       {"a1", "a2", "c1", "c2", "c3", "c4", "c5", "d1", "d2", "d3", "d4", "d5"},
       {"a1", "a2", "alpha1", "alpha2", "c1", "c2", "c3", "c4", "c5", "d1",
        "d2", "d3", "d4", "d5", "delta1", "delta2", "delta4", "delta5",
        "gamma1", "gamma2", "gamma4", "gamma5"}},
      {{1,
        {"a1", "a2"},
        {{"c1", "c2", "c3", "c4", "c5"}, {"d1", "d2", "d3", "d4", "d5"}},
        2,
        0,
        2},
       {2,
        {"c3", "d3"},
        {{"alpha1", "alpha2", "delta1", "delta2", "delta4", "delta5", "gamma1",
          "gamma2", "gamma4", "gamma5"}},
        1,
        1,
        2}});

  const DclstarReport dr =
      classify_dclstar(s, I, fixture_certificate("steiner-ce"));
  auto verdict_of = [&](const char* nm) {
    return dr.dclstar[static_cast<std::size_t>(s.index_of(nm))];
  };
  c.eq_verdict("definable-closure-star verdict for alpha1",
               verdict_of("alpha1"), Verdict::Yes);
  c.eq_verdict("definable-closure-star verdict for alpha2",
               verdict_of("alpha2"), Verdict::Yes);
  for (const char* nm : {"a1", "a2", "d1", "d3"})
    c.eq_verdict(std::string("definable-closure-star verdict for ") + nm,
                 verdict_of(nm), Verdict::No);
  c.eq_verdict("symmetric-closure-star verdict for alpha1 (uncertified)",
               dr.sdclstar[static_cast<std::size_t>(alpha1)],
               Verdict::Undetermined);
}

void verify_overlap_flowers(Checker& c) {
  const Structure& s = c.s;
  const MuFunction mu = fixture_mu("overlap-flowers");
  DimOracle dq(s);
  const PointSet I = s.base_set();

  c.eq_int("point count", s.n(), 21);
  c.eq_int("relation count", static_cast<long long>(s.triples().size()), 21);
  c.eq_int("predimension of the whole", delta(s, s.all()), 0);
  c.eq_int("predimension of the base", delta(s, I), 3);
  c.eq_int("dimension of the base", dq.dim(I), 0);
  c.is_true("base is not self-sufficient", !dq.is_strong(I));
  c.eq_set("algebraic trace of the empty set covers everything",
           dq.acl_trace(0), s.names_of(s.all()));

  const auto Gall = automorphisms(s);
  const auto Gpw = automorphisms(s, I);
  const auto Gsw = automorphisms(s, PointSet{0}, std::vector<PointSet>{I});
  c.eq_int("automorphism count", static_cast<long long>(Gall.size()), 96);
  c.eq_int("base-fixing automorphism count", static_cast<long long>(Gpw.size()), 48);
  c.eq_int("base-preserving automorphism count", static_cast<long long>(Gsw.size()), 96);
  c.eq_set("fixed points, base fixed", fixed_points(s, Gpw),
           {"b1", "b2", "b3", "x", "y", "z"});
  c.eq_set("fixed points, base preserved", fixed_points(s, Gsw), {"b1", "z"});

  check_good_pairs(c, s, mu, 4, {{{"x", "y", "z"}, {"b1", "b2", "b3"}, 4, 4}});

  GoodPair gp;
  gp.ambient = &s;
  gp.A = c.set({"x", "y", "z"});
  gp.B = I;
  const Bouquet bq = flowers_and_bouquet(s, gp, I);
  c.eq_int("bouquet size", static_cast<long long>(bq.flowers.size()), 1);
  if (!bq.flowers.empty()) {
    const Flower& f = bq.flowers[0];
    c.eq_int("petal count", static_cast<long long>(f.petals.size()), 7);
    c.eq_int("certificate count",
             static_cast<long long>(f.certificates.size()), 8);
    bool all4 = true;
    for (const auto& cert : f.certificates)
      if (cert.size() != 4) all4 = false;
    c.is_true("every certificate has four petals", all4);
    c.eq_int("flower size bound (mu plus base predimension)",
             static_cast<long long>(f.petals.size()),
             mu.value(s, gp.A, gp.B) + delta(s, I));
  }

  bool threw_dependent = false;
  try {
    tree_decompose(s, I, StabilizerKind::Pointwise, &mu);
  } catch (const Error& e) {
    threw_dependent = e.code() == Errc::DependentBase;
  }
  c.is_true("tree decomposition rejects the dependent base", threw_dependent);

  const DclstarReport dr =
      classify_dclstar(s, I, fixture_certificate("overlap-flowers"));
  for (const char* nm : {"x", "y", "z"})
    c.eq_verdict(std::string("definable-closure-star verdict for ") + nm,
                 dr.dclstar[static_cast<std::size_t>(s.index_of(nm))],
                 Verdict::Undetermined);
  {
    Names yes;
    for (int p = 0; p < s.n(); ++p)
      if (!contains(I, p) &&
          dr.dclstar[static_cast<std::size_t>(p)] == Verdict::Yes)
        yes.push_back(s.name(p));
    c.log("no non-base point certainly definable", yes.empty(),
          "unexpected yes verdicts: " + join(yes));
  }
}

void verify_overlap_flowers_2(Checker& c) {
  const Structure& s = c.s;
  const MuFunction mu = fixture_mu("overlap-flowers-2");
  DimOracle dq(s);
  const PointSet I = s.base_set();

  c.eq_int("point count", s.n(), 14);
  c.eq_int("relation count", static_cast<long long>(s.triples().size()), 12);
  c.eq_int("predimension of the whole", delta(s, s.all()), 2);
  c.eq_int("dimension of the base", dq.dim(I), 2);
  c.is_true("base is self-sufficient", dq.is_strong(I));

  const auto Gall = automorphisms(s);
  const auto Gpw = automorphisms(s, I);
  const auto Gsw = automorphisms(s, PointSet{0}, std::vector<PointSet>{I});
  c.eq_int("automorphism count", static_cast<long long>(Gall.size()), 128);
  c.eq_int("base-fixing automorphism count", static_cast<long long>(Gpw.size()), 64);
  c.eq_int("base-preserving automorphism count", static_cast<long long>(Gsw.size()), 128);
  c.eq_set("fixed points, base fixed", fixed_points(s, Gpw), {"b1", "b2"});
  c.eq_set("fixed points, base preserved", fixed_points(s, Gsw), {});
  bool swap_realized = false;
  const int b1 = s.index_of("b1"), b2 = s.index_of("b2");
  for (const Perm& g : Gsw)
    if (g[static_cast<std::size_t>(b1)] == b2) swap_realized = true;
  c.is_true("base swap realized by the base-preserving group", swap_realized);

  check_good_pairs(c, s, mu, 4,
                   {{{"c11", "c12", "c13"}, {"b1", "b2"}, 2, 2},
                    {{"c21", "c22", "c23"}, {"b1", "b2"}, 2, 2},
                    {{"d11", "d12", "d13"}, {"b1", "b2"}, 2, 2},
                    {{"d21", "d22", "d23"}, {"b1", "b2"}, 2, 2}});
  c.eq_int("first extension multiplicity",
           chi(s, c.set({"c11", "c12", "c13"}), I), 2);

  GoodPair gp;
  gp.ambient = &s;
  gp.A = c.set({"c11", "c12", "c13"});
  gp.B = I;
  const Bouquet bq = flowers_and_bouquet(s, gp, I);
  c.eq_int("bouquet size", static_cast<long long>(bq.flowers.size()), 2);
  if (bq.flowers.size() == 2) {
    const Flower& f0 = bq.flowers[0];
    const Flower& f1 = bq.flowers[1];
    c.eq_int("first flower arrangement starts at b1", f0.arrangement[0], b1);
    c.eq_sets("first flower petals", f0.petals,
              {{"c11", "c12", "c13"}, {"c21", "c22", "c23"}});
    c.eq_int("first flower certificate count",
             static_cast<long long>(f0.certificates.size()), 1);
    c.eq_int("second flower arrangement starts at b2", f1.arrangement[0], b2);
    c.eq_sets("second flower petals", f1.petals,
              {{"d11", "d12", "d13"}, {"d21", "d22", "d23"}});
    c.eq_int("second flower certificate count",
             static_cast<long long>(f1.certificates.size()), 1);
  }

  check_chain(c, linear_decompose(s, I),
              {{{"c11", "c12", "c13"}, {"b1", "b2"}},
               {{"c21", "c22", "c23"}, {"b1", "b2"}},
               {{"d11", "d12", "d13"}, {"b1", "b2"}},
               {{"d21", "d22", "d23"}, {"b1", "b2"}}});
  check_tree(c, tree_decompose(s, I, StabilizerKind::Pointwise, &mu), 1,
             {{"b1", "b2"},
              {"b1", "b2", "c11", "c12", "c13", "c21", "c22", "c23", "d11",
               "d12", "d13", "d21", "d22", "d23"}},
             {{1, {"b1", "b2"}, {{"c11", "c12", "c13"}, {"c21", "c22", "c23"}},
               2, 0, 2},
              {1, {"b1", "b2"}, {{"d11", "d12", "d13"}, {"d21", "d22", "d23"}},
               2, 0, 2}});
}

void verify_k4_design(Checker& c) {
  const Structure& s = c.s;
  const MuFunction mu = fixture_mu("k4-design");
  DimOracle dq(s);

  c.eq_int("point count", s.n(), 4);
  c.eq_int("relation count", static_cast<long long>(s.triples().size()), 4);
  c.eq_int("predimension of the whole", delta(s, s.all()), 0);
  c.eq_int("dimension of w", dq.dim(c.set({"w"})), 0);
  c.eq_set("closure of w", icl(s, c.set({"w"})).closure, {"w", "x", "y", "z"});
  c.eq_set("algebraic trace of the empty set", dq.acl_trace(0),
           {"w", "x", "y", "z"});

  const auto Gall = automorphisms(s);
  c.eq_int("automorphism count", static_cast<long long>(Gall.size()), 24);
  c.eq_sets("orbits", orbits(s, Gall), {{"w", "x", "y", "z"}});
  c.eq_set("fixed points", fixed_points(s, Gall), {});

  check_good_pairs(c, s, mu, 4, {{{"w", "x", "y", "z"}, {}, 1, 1}});

  const DclstarReport dr = classify_dclstar(s, 0, fixture_certificate("k4-design"));
  for (int p = 0; p < s.n(); ++p)
    c.eq_verdict("definable-closure-star verdict for " + s.name(p),
                 dr.dclstar[static_cast<std::size_t>(p)], Verdict::No);
}

void verify_alpha_line(Checker& c, int k) {
  const Structure& s = c.s;
  const std::string name = "alpha-line-" + std::to_string(k);
  const MuFunction mu = fixture_mu(name);
  DimOracle dq(s);
  const PointSet I = s.base_set();

  static const long long factorial[] = {1, 1, 2, 6, 24, 120};
  c.eq_int("point count", s.n(), k);
  c.eq_int("full line length",
           static_cast<long long>(popcount(s.full_lines().at(0))), k);
  c.eq_int("predimension of the whole", delta(s, s.all()), 2);
  c.eq_int("dimension of the base", dq.dim(I), 2);
  c.is_true("base is self-sufficient", dq.is_strong(I));
  c.eq_set("algebraic trace of the empty set", dq.acl_trace(0), {});
  c.eq_set("algebraic trace of the base", dq.acl_trace(I), s.names_of(s.all()));

  const auto Gall = automorphisms(s);
  const auto Gpw = automorphisms(s, I);
  const auto Gsw = automorphisms(s, PointSet{0}, std::vector<PointSet>{I});
  c.eq_int("automorphism count", static_cast<long long>(Gall.size()),
           factorial[k]);
  c.eq_int("base-fixing automorphism count",
           static_cast<long long>(Gpw.size()), factorial[k - 2]);
  c.eq_int("base-preserving automorphism count",
           static_cast<long long>(Gsw.size()), 2 * factorial[k - 2]);

  const std::vector<GoodPair> pairs = enumerate_good_pairs_all(s, 4);
  c.eq_int("good pair count", static_cast<long long>(pairs.size()), k);
  bool all_single = true, all_match = true;
  for (const GoodPair& gp : pairs) {
    if (popcount(gp.A) != 1) all_single = false;
    if (chi(s, gp) != k - 2 || mu.value(s, gp.A, gp.B) != k - 2)
      all_match = false;
  }
  c.is_true("every good pair is a single related point", all_single);
  c.is_true("every pair has multiplicity and bound k-2", all_match);
  c.is_true("mu bound holds everywhere", in_Lmu(s, mu, 4).ok);

  const QuasigroupReport qr = quasigroup_experiment(s, s.full_lines().at(0), I);
  c.eq_int("product stabilizer order",
           static_cast<long long>(qr.stabilizer_order), factorial[k - 2]);
  c.is_true("stabilizer acts as the full symmetric group on the free points",
            qr.acts_full_symmetric);
  if (k == 3) {
    c.eq_set("fixed free point", qr.fixed_free, {"x1"});
    c.is_true("product is definable on a 3-point line", qr.definable_product);
    c.is_true("line flagged too short for the experiment", qr.line_too_short);
  } else {
    c.eq_set("no fixed free point", qr.fixed_free, {});
    c.is_true("no definable product", !qr.definable_product);
    c.eq_int("candidate product orbit size", qr.product_orbit, k - 2);
  }
}

}  // namespace

FixtureReport verify_fixture(const std::string& name) {
  const Structure s = fixture_structure(name);
  Checker c(s, name);
  if (name == "examp1") verify_examp1(c);
  else if (name == "examp2") verify_examp2(c);
  else if (name == "examp2-sym") verify_examp2_sym(c);
  else if (name == "steiner-ce") verify_steiner_ce(c);
  else if (name == "overlap-flowers") verify_overlap_flowers(c);
  else if (name == "overlap-flowers-2") verify_overlap_flowers_2(c);
  else if (name == "k4-design") verify_k4_design(c);
  else if (name == "alpha-line-3") verify_alpha_line(c, 3);
  else if (name == "alpha-line-4") verify_alpha_line(c, 4);
  else if (name == "alpha-line-5") verify_alpha_line(c, 5);
  else fail(Errc::UnknownFixture, "no fixture named '" + name + "' is registered");
  return c.rep;
}

}  // namespace smc
