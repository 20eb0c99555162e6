#include "smc/decomp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "smc/closure.hpp"
#include "smc/predim.hpp"
#include "smc/search.hpp"

namespace smc {

namespace {

// The smallest (then name-lexicographically least) 0-primitive extension of
// cur, with its base.  Throws Stuck when none exists.
ChainStep next_chain_step(const Structure& s, PointSet cur) {
  std::vector<int> rest = points_of(s.all() & ~cur);
  const int r = static_cast<int>(rest.size());
  for (int k = 1; k <= r; ++k) {
    std::optional<std::vector<std::string>> best;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
      PointSet A = 0;
      for (int i : idx) A |= point_bit(rest[static_cast<std::size_t>(i)]);
      if (delta_rel(s, A, cur) == 0 && is_primitive(s, A, cur)) {
        std::vector<std::string> names = s.names_of(A);
        if (!best || names < *best) best = std::move(names);
      }
      int i = k - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == r - k + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    if (best) {
      const PointSet A = s.set_of_names(*best);
      return {A, find_base(s, A, cur)};
    }
  }
  fail(Errc::Stuck, "no 0-primitive extension of " + s.format_set(cur) + " exists");
}

std::vector<ChainStep> chain_from(const Structure& s, PointSet start) {
  std::vector<ChainStep> out;
  PointSet cur = start;
  while (cur != s.all()) {
    out.push_back(next_chain_step(s, cur));
    cur |= out.back().ext;
  }
  return out;
}

void check_step(const Structure& s, PointSet pred, const ChainStep& st,
                const char* err) {
  if (delta_rel(s, st.ext, pred) != 0 || !is_primitive(s, st.ext, pred) ||
      delta_rel(s, st.ext, st.base) != 0 || !is_primitive(s, st.ext, st.base))
    fail(Errc::IllegalSwap, err);
}

}  // namespace

LinearDecomposition linear_decompose(const Structure& s, PointSet I) {
  if ((I & ~s.all()) != 0)
    fail(Errc::UnknownPoint, "linear_decompose: start point out of range");
  if (!DimOracle(s).is_strong(I))
    fail(Errc::NotStrongBase,
         "linear_decompose: " + s.format_set(I) + " is not self-sufficient");
  LinearDecomposition ld;
  ld.ambient = &s;
  ld.start = I;
  ld.chain.push_back(I);
  ld.steps = chain_from(s, I);
  for (const ChainStep& st : ld.steps) ld.chain.push_back(ld.chain.back() | st.ext);
  return ld;
}

LinearDecomposition reorder(const LinearDecomposition& ld, int i) {
  if (ld.ambient == nullptr)
    throw std::invalid_argument("reorder: decomposition lacks an ambient");
  const int r = static_cast<int>(ld.steps.size());
  if (i < 0 || i + 1 >= r)
    throw std::invalid_argument("reorder: no adjacent step pair at this index");
  const Structure& s = *ld.ambient;
  const ChainStep first = ld.steps[static_cast<std::size_t>(i + 1)];
  const ChainStep second = ld.steps[static_cast<std::size_t>(i)];
  const PointSet ground = ld.chain[static_cast<std::size_t>(i)];
  if ((first.base & ~ground) != 0)
    fail(Errc::IllegalSwap, "reorder: the later step's base needs the earlier step");
  check_step(s, ground, first, "reorder: swapped step lost 0-primitivity");
  check_step(s, ground | first.ext, second,
             "reorder: displaced step lost 0-primitivity");

  LinearDecomposition out = ld;
  out.steps[static_cast<std::size_t>(i)] = first;
  out.steps[static_cast<std::size_t>(i + 1)] = second;
  out.chain[static_cast<std::size_t>(i + 1)] = ground | first.ext;
  return out;
}

namespace {

// For a single added point in a LinearSpace chain: its supporting line
// inside ground (the unique full line through the point meeting ground in
// >= 2 points), or 0.
PointSet supporting_full_line(const Structure& s, int p, PointSet ground) {
  for (PointSet ln : s.full_lines())
    if (contains(ln, p) && popcount(ln & ground) >= 2) return ln;
  return 0;
}

bool same_type_over(const Structure& s, PointSet a1, PointSet a2, PointSet B) {
  if (popcount(a1) != popcount(a2)) return false;
  std::vector<int> remap1, remap2;
  Structure sub1 = induced(s, a1 | B, &remap1);
  Structure sub2 = induced(s, a2 | B, &remap2);
  std::vector<std::pair<int, int>> fixed;
  for_each_point(B, [&](int p) {
    fixed.emplace_back(remap1[static_cast<std::size_t>(p)],
                       remap2[static_cast<std::size_t>(p)]);
  });
  return !embeddings(sub1, sub2, fixed).empty();
}

// Whether some automorphism of s fixes B pointwise and carries `from` into
// `to` (setwise; equality of sizes makes it onto).
bool base_stabilizer_maps(const Structure& s, PointSet B, PointSet from,
                          PointSet to) {
  if (from == to) return true;
  std::vector<std::pair<int, int>> fixed;
  for_each_point(B, [&](int p) { fixed.emplace_back(p, p); });
  return !embeddings(s, s, fixed, {{from, to}}).empty();
}

}  // namespace

TreeDecomposition tree_decompose(const Structure& s, PointSet I,
                                 StabilizerKind group, const MuFunction* mu) {
  if ((I & ~s.all()) != 0)
    fail(Errc::UnknownPoint, "tree_decompose: root point out of range");
  DimOracle dq(s);
  if (dq.dim(I) < popcount(I))
    fail(Errc::DependentBase,
         "tree_decompose: root set " + s.format_set(I) + " is dependent");

  TreeDecomposition td;
  td.ambient = &s;
  td.root = I;

  // A^0: the algebraic trace of the empty set and of each root point.
  td.zero_parts.push_back(dq.acl_trace(0));
  PointSet a0 = td.zero_parts[0];
  for_each_point(I, [&](int p) {
    td.zero_parts.push_back(dq.acl_trace(point_bit(p)));
    a0 |= td.zero_parts.back();
  });
  td.strata.push_back(a0);

  std::vector<ChainStep> chain;
  try {
    chain = chain_from(s, a0);
  } catch (const Error& e) {
    if (e.code() == Errc::Stuck)
      fail(Errc::NotNormal,
           "tree_decompose: structure is not generated over its root: " +
               std::string(e.what()));
    throw;
  }

  PointSet cur = a0;
  for (const ChainStep& st : chain) {
    Petal petal;
    petal.points = st.ext;
    petal.base = st.base;
    int home = -1;  // least stratum containing the base
    if (s.flavor() == Flavor::LinearSpace && popcount(st.ext) == 1) {
      const PointSet ln =
          supporting_full_line(s, first_point(st.ext), cur);
      if (ln != 0) {
        petal.linear_cluster = true;
        petal.line = ln;
        for (std::size_t m = 0; m < td.strata.size(); ++m) {
          if (popcount(ln & td.strata[m]) >= 2) {
            home = static_cast<int>(m);
            break;
          }
        }
        // The petal's base is the least-named pair on the line's home part.
        std::vector<int> pts = points_of(ln & td.strata[static_cast<std::size_t>(home)]);
        std::sort(pts.begin(), pts.end(),
                  [&](int x, int y) { return s.name(x) < s.name(y); });
        petal.base = point_bit(pts[0]) | point_bit(pts[1]);
      }
    }
    if (home < 0) {
      for (std::size_t m = 0; m < td.strata.size(); ++m) {
        if ((petal.base & ~td.strata[m]) == 0) {
          home = static_cast<int>(m);
          break;
        }
      }
    }
    if (home < 0)
      fail(Errc::NotNormal, "tree_decompose: a step's base escapes all strata");
    petal.stratum = home + 1;
    while (static_cast<int>(td.strata.size()) <= petal.stratum)
      td.strata.push_back(td.strata.back());
    for (std::size_t j = static_cast<std::size_t>(petal.stratum);
         j < td.strata.size(); ++j)
      td.strata[j] |= st.ext;
    td.petals.push_back(petal);
    cur |= st.ext;
  }
  td.height = static_cast<int>(td.strata.size()) - 1;

  // Clusters: same stratum, same base, isomorphic over the base pointwise.
  // First match in insertion order wins; output sorted by key.
  using Key = std::tuple<int, PointSet, PointSet>;
  std::vector<std::pair<Key, std::vector<PointSet>>> groups;
  for (const Petal& p : td.petals) {
    bool placed = false;
    for (auto& [key, members] : groups) {
      const auto& [kst, kb, rep] = key;
      if (kst == p.stratum && kb == p.base &&
          same_type_over(s, rep, p.points, p.base)) {
        members.push_back(p.points);
        placed = true;
        break;
      }
    }
    if (!placed)
      groups.push_back({Key{p.stratum, p.base, p.points}, {p.points}});
  }
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  for (const auto& [key, members] : groups) {
    const auto& [st, bmask, rep] = key;
    Cluster c;
    c.stratum = st;
    c.base = bmask;
    c.petals = members;
    c.ell = static_cast<int>(members.size());
    const PointSet lower = td.strata[static_cast<std::size_t>(st - 1)];
    std::vector<PointSet> inside;
    for (PointSet copy : copies_over_base(s, members[0], bmask))
      if ((copy & ~lower) == 0) inside.push_back(copy);
    c.nu = max_disjoint_count(inside);
    if (mu != nullptr) c.mu = mu->value(s, members[0], bmask);
    for (std::size_t i = 1; i < members.size(); ++i) {
      if (!base_stabilizer_maps(s, bmask, members[i], members[0])) {
        c.transitive = false;
        break;
      }
    }
    td.clusters.push_back(std::move(c));
  }

  // Star partition: linear petals grouped by (stratum, line).
  std::map<std::pair<int, PointSet>, std::vector<int>> star;
  std::vector<std::vector<int>> singles;
  for (std::size_t i = 0; i < td.petals.size(); ++i) {
    const Petal& p = td.petals[i];
    if (p.linear_cluster)
      star[{p.stratum, p.line}].push_back(static_cast<int>(i));
    else
      singles.push_back({static_cast<int>(i)});
  }
  for (auto& [key, members] : star) td.star_partition.push_back(members);
  for (auto& g : singles) td.star_partition.push_back(g);
  std::sort(td.star_partition.begin(), td.star_partition.end());

  // J-classes: cluster bases related by the chosen stabilizer of the root.
  const std::vector<Perm> G =
      group == StabilizerKind::Pointwise
          ? automorphisms(s, I)
          : automorphisms(s, PointSet{0}, I != 0 ? std::vector<PointSet>{I}
                                                 : std::vector<PointSet>{});
  const int nc = static_cast<int>(td.clusters.size());
  std::vector<int> parent(static_cast<std::size_t>(nc));
  for (int i = 0; i < nc; ++i) parent[static_cast<std::size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (int i = 0; i < nc; ++i) {
    for (int j = i + 1; j < nc; ++j) {
      if (td.clusters[static_cast<std::size_t>(i)].stratum !=
          td.clusters[static_cast<std::size_t>(j)].stratum)
        continue;
      const PointSet bi = td.clusters[static_cast<std::size_t>(i)].base;
      const PointSet bj = td.clusters[static_cast<std::size_t>(j)].base;
      for (const Perm& g : G) {
        PointSet img = 0;
        for_each_point(bi, [&](int p) {
          img |= point_bit(g[static_cast<std::size_t>(p)]);
        });
        if (img == bj) {
          const int a = find(i), b = find(j);
          if (a != b) parent[static_cast<std::size_t>(a)] = b;
          break;
        }
      }
    }
  }
  std::map<int, std::vector<int>> jgroups;
  for (int i = 0; i < nc; ++i) jgroups[find(i)].push_back(i);
  for (auto& [root, members] : jgroups) td.j_classes.push_back(members);
  std::sort(td.j_classes.begin(), td.j_classes.end());
  return td;
}

std::optional<int> determines(const TreeDecomposition& td, int petal_index) {
  if (td.ambient == nullptr)
    throw std::invalid_argument("determines: decomposition lacks an ambient");
  if (petal_index < 0 ||
      petal_index >= static_cast<int>(td.petals.size()))
    throw std::invalid_argument("determines: petal index out of range");
  const Petal& p = td.petals[static_cast<std::size_t>(petal_index)];
  if (p.stratum < 2)
    throw std::invalid_argument("determines: petal must sit at stratum 2 or higher");
  const PointSet below2 = td.strata[static_cast<std::size_t>(p.stratum - 2)];
  const PointSet probe = p.base & ~below2;

  // Lower units: star groups (LinearSpace) or single petals, one stratum down.
  std::optional<int> hit;
  for (const std::vector<int>& unit : td.star_partition) {
    const Petal& rep = td.petals[static_cast<std::size_t>(unit[0])];
    if (rep.stratum != p.stratum - 1) continue;
    PointSet pts = 0;
    for (int i : unit) pts |= td.petals[static_cast<std::size_t>(i)].points;
    if ((pts & probe) == 0) continue;
    if (hit) return std::nullopt;  // two units meet the base: not determined
    hit = unit[0];
  }
  return hit;
}

Bouquet flowers_and_bouquet(const Structure& s, const GoodPair& gp,
                            PointSet group_base) {
  if (((gp.A | gp.B | group_base) & ~s.all()) != 0)
    fail(Errc::UnknownPoint, "flowers_and_bouquet: point out of range");
  Bouquet bq;
  bq.A = gp.A;
  bq.B = gp.B;

  const std::vector<int> bpts = points_of(gp.B);
  const std::vector<Perm> sw =
      group_base != 0
          ? automorphisms(s, PointSet{0}, std::vector<PointSet>{group_base})
          : automorphisms(s);

  std::set<std::vector<int>> arrangements;
  for (const Perm& g : sw) {
    PointSet img = 0;
    for (int p : bpts) img |= point_bit(g[static_cast<std::size_t>(p)]);
    if (img != gp.B) continue;  // keep maps stabilizing the base setwise
    std::vector<int> arr;
    arr.reserve(bpts.size());
    for (int p : bpts) arr.push_back(g[static_cast<std::size_t>(p)]);
    arrangements.insert(std::move(arr));
  }

  std::vector<int> remap;
  Structure sub = induced(s, gp.A | gp.B, &remap);
  std::vector<int> apts;
  for_each_point(gp.A, [&](int p) {
    apts.push_back(remap[static_cast<std::size_t>(p)]);
  });

  std::set<std::vector<PointSet>> seen;
  for (const std::vector<int>& arr : arrangements) {
    std::vector<std::pair<int, int>> fixed;
    for (std::size_t i = 0; i < bpts.size(); ++i)
      fixed.emplace_back(remap[static_cast<std::size_t>(bpts[i])], arr[i]);
    std::set<PointSet> images;
    for (const Embedding& e : embeddings(sub, s, fixed)) {
      PointSet img = 0;
      for (int p : apts) img |= point_bit(e.map[static_cast<std::size_t>(p)]);
      images.insert(img);
    }
    Flower f;
    f.arrangement = arr;
    f.petals.assign(images.begin(), images.end());
    if (!seen.insert(f.petals).second) continue;  // same flower, other name
    f.certificates = maximal_disjoint_families(f.petals);
    bq.flowers.push_back(std::move(f));
  }

  // Distinct flowers must not share a petal.
  for (std::size_t i = 0; i < bq.flowers.size(); ++i) {
    for (std::size_t j = i + 1; j < bq.flowers.size(); ++j) {
      for (PointSet p : bq.flowers[i].petals) {
        if (std::binary_search(bq.flowers[j].petals.begin(),
                               bq.flowers[j].petals.end(), p))
          throw std::logic_error(
              "flowers_and_bouquet: distinct flowers share a petal");
      }
    }
  }
  return bq;
}

}  // namespace smc
