#include "smc/amalgam.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "smc/closure.hpp"
#include "smc/predim.hpp"
#include "smc/search.hpp"

namespace smc {

namespace {

std::array<int, 3> triple_array(PointSet t) {
  std::array<int, 3> a{};
  int i = 0;
  for_each_point(t, [&](int p) { a[i++] = p; });
  return a;
}

// A fresh name based on `want` that is unused in `taken`.
std::string fresh_name(const std::string& want, std::set<std::string>& taken) {
  std::string name = want;
  while (!taken.insert(name).second) name += "'";
  return name;
}

}  // namespace

AmalgamResult free_amalgam(const Structure& A, const Structure& B,
                           const std::vector<std::pair<int, int>>& glue,
                           const MuFunction* mu) {
  if (A.flavor() != B.flavor())
    throw std::invalid_argument("free_amalgam: factors have different flavors");

  PointSet cA = 0, cB = 0;
  std::vector<int> a_to_b(static_cast<std::size_t>(A.n()), -1);
  for (const auto& [pa, pb] : glue) {
    if (pa < 0 || pa >= A.n() || pb < 0 || pb >= B.n())
      fail(Errc::UnknownPoint, "free_amalgam: glue point out of range");
    if (contains(cA, pa) || contains(cB, pb))
      throw std::invalid_argument("free_amalgam: glue map is not injective");
    cA |= point_bit(pa);
    cB |= point_bit(pb);
    a_to_b[static_cast<std::size_t>(pa)] = pb;
  }

  // The glue must carry triples inside C both ways.
  auto map_triple_ab = [&](PointSet t) {
    PointSet out = 0;
    for_each_point(t, [&](int p) { out |= point_bit(a_to_b[static_cast<std::size_t>(p)]); });
    return out;
  };
  for (PointSet t : A.triples()) {
    if ((t & ~cA) != 0) continue;
    if (!B.has_triple(map_triple_ab(t)))
      fail(Errc::BadGlue, "free_amalgam: glued sets are not isomorphic (left relation missing on the right)");
  }
  {
    std::vector<int> b_to_a(static_cast<std::size_t>(B.n()), -1);
    for (const auto& [pa, pb] : glue) b_to_a[static_cast<std::size_t>(pb)] = pa;
    for (PointSet t : B.triples()) {
      if ((t & ~cB) != 0) continue;
      PointSet pre = 0;
      for_each_point(t, [&](int p) { pre |= point_bit(b_to_a[static_cast<std::size_t>(p)]); });
      if (!A.has_triple(pre))
        fail(Errc::BadGlue, "free_amalgam: glued sets are not isomorphic (right relation missing on the left)");
    }
  }
  if (A.flavor() == Flavor::LinearSpace && !is_strong_within(A, cA, A.all()))
    fail(Errc::BadGlue, "free_amalgam: glue is not self-sufficient in the left factor");

  // Result points: all of A, then B outside the glue.
  std::set<std::string> taken;
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(A.n() + B.n() - popcount(cB)));
  for (int p = 0; p < A.n(); ++p) {
    taken.insert(A.name(p));
    names.push_back(A.name(p));
  }
  std::vector<int> right(static_cast<std::size_t>(B.n()), -1);
  for (const auto& [pa, pb] : glue) right[static_cast<std::size_t>(pb)] = pa;
  for (int p = 0; p < B.n(); ++p) {
    if (contains(cB, p)) continue;
    right[static_cast<std::size_t>(p)] = static_cast<int>(names.size());
    names.push_back(fresh_name(B.name(p), taken));
  }
  const int nn = static_cast<int>(names.size());
  if (nn > kMaxPoints)
    throw std::invalid_argument("free_amalgam: result exceeds the point cap");

  auto map_right = [&](PointSet t) {
    PointSet out = 0;
    for_each_point(t, [&](int p) { out |= point_bit(right[static_cast<std::size_t>(p)]); });
    return out;
  };

  std::set<PointSet> tset(A.triples().begin(), A.triples().end());
  for (PointSet t : B.triples()) tset.insert(map_right(t));

  std::vector<std::pair<int, int>> identified;
  if (A.flavor() == Flavor::LinearSpace) {
    // Merge factor lines sharing a 2-point glue trace.  By linearity each
    // trace supports at most one line per factor, so one round suffices.
    for (PointSet la : A.full_lines()) {
      if (popcount(la & cA) < 2) continue;
      PointSet trace = 0;  // the glue trace of la, in B indices
      for_each_point(la & cA, [&](int p) {
        trace |= point_bit(a_to_b[static_cast<std::size_t>(p)]);
      });
      for (PointSet lb : B.full_lines()) {
        if (popcount(lb & cB) < 2) continue;
        if ((lb & cB) != trace) continue;
        const PointSet merged = la | map_right(lb);
        if (mu != nullptr && mu->alpha_value &&
            popcount(merged) > *mu->alpha_value + 2) {
          fail(Errc::LineOverflow,
               "free_amalgam: merged line would exceed the permitted length");
        }
        // All 3-subsets of the merged line become relations.
        std::vector<int> pts = points_of(merged);
        for (std::size_t i = 0; i < pts.size(); ++i)
          for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t k = j + 1; k < pts.size(); ++k)
              tset.insert(point_bit(pts[i]) | point_bit(pts[j]) | point_bit(pts[k]));
        for_each_point(la & ~cA, [&](int x) {
          for_each_point(lb & ~cB, [&](int y) {
            identified.emplace_back(x, right[static_cast<std::size_t>(y)]);
          });
        });
      }
    }
    std::sort(identified.begin(), identified.end());
  }

  std::vector<std::array<int, 3>> triples;
  triples.reserve(tset.size());
  for (PointSet t : tset) triples.push_back(triple_array(t));

  AmalgamResult out{Structure(A.flavor(), std::move(names), std::move(triples),
                              A.base()),
                    {}, {}, std::move(identified)};
  out.left_embed.resize(static_cast<std::size_t>(A.n()));
  for (int p = 0; p < A.n(); ++p) out.left_embed[static_cast<std::size_t>(p)] = p;
  out.right_embed = std::move(right);

  const int lhs = delta(out.result, out.result.all());
  const int rhs = delta(A, A.all()) + delta(B, B.all()) - delta(A, cA);
  if (lhs != rhs)
    throw std::logic_error("free_amalgam: predimension additivity failed");
  return out;
}

BuildDemand alpha_demand(const Structure& seed, PointSet base_pair) {
  if (popcount(base_pair) != 2)
    throw std::invalid_argument("alpha_demand: base must have exactly two points");
  if ((base_pair & ~seed.all()) != 0)
    fail(Errc::UnknownPoint, "alpha_demand: base point out of range");
  const std::vector<int> bp = points_of(base_pair);
  std::string ext = "a0";
  while (ext == seed.name(bp[0]) || ext == seed.name(bp[1])) ext += "'";
  std::vector<std::string> names{seed.name(bp[0]), seed.name(bp[1]), ext};
  BuildDemand d{Structure(seed.flavor(), std::move(names), {{0, 1, 2}}, {}),
                {0, 1},
                bp};
  return d;
}

BuildDemand copy_demand(const Structure& seed, PointSet A, PointSet B) {
  if ((A & B) != 0)
    throw std::invalid_argument("copy_demand: extension meets its base");
  if (((A | B) & ~seed.all()) != 0)
    fail(Errc::UnknownPoint, "copy_demand: point out of range");
  std::vector<int> remap;
  Structure pattern = induced(seed, A | B, &remap);
  BuildDemand d{std::move(pattern), {}, {}};
  for_each_point(B, [&](int p) {
    d.pattern_base.push_back(remap[p]);
    d.target_base.push_back(p);
  });
  return d;
}

namespace {

// Disjoint-copy count of the pattern's non-base part over the target base.
int chi_of_demand(const Structure& cur, const BuildDemand& d) {
  std::vector<std::pair<int, int>> fixed;
  for (std::size_t i = 0; i < d.pattern_base.size(); ++i)
    fixed.emplace_back(d.pattern_base[i], d.target_base[i]);
  PointSet pbase = 0;
  for (int p : d.pattern_base) pbase |= point_bit(p);
  std::set<PointSet> images;
  for (const Embedding& e : embeddings(d.pattern, cur, fixed)) {
    PointSet img = 0;
    for_each_point(d.pattern.all() & ~pbase,
                   [&](int p) { img |= point_bit(e.map[p]); });
    images.insert(img);
  }
  return max_disjoint_count(
      std::vector<PointSet>(images.begin(), images.end()));
}

}  // namespace

BuildResult build_generic(const Structure& seed, const MuFunction& mu,
                          int budget, const std::vector<BuildDemand>& demands) {
  if (budget < 1 || budget > 24)
    throw std::invalid_argument("build_generic: budget must be between 1 and 24");
  if (seed.n() > budget)
    throw std::invalid_argument("build_generic: seed exceeds the budget");
  for (const BuildDemand& d : demands) {
    if (d.pattern_base.size() != d.target_base.size())
      throw std::invalid_argument("build_generic: demand base lists differ in length");
    for (int p : d.target_base)
      if (p < 0 || p >= seed.n())
        fail(Errc::UnknownPoint, "build_generic: demand target out of range");
  }
  if (!in_Lmu(seed, mu, 4).ok)
    fail(Errc::SeedNotAdmissible, "build_generic: seed violates the mu bound");

  BuildResult out{seed, {}, false, {}};
  for (std::size_t di = 0; di < demands.size(); ++di) {
    const BuildDemand& d = demands[di];
    PointSet pbase = 0;
    for (int p : d.pattern_base) pbase |= point_bit(p);
    const PointSet pext = d.pattern.all() & ~pbase;
    PointSet tbase = 0;
    for (int p : d.target_base) tbase |= point_bit(p);
    const int target_mu = mu.value(d.pattern, pext, pbase);
    const std::string code = to_hex(pair_code(d.pattern, pext, pbase));

    bool met = chi_of_demand(out.result, d) >= target_mu;
    while (!met) {
      if (out.result.n() + popcount(pext) > budget) {
        out.budget_exhausted = true;
        out.unmet.push_back(di);
        break;
      }
      std::vector<std::pair<int, int>> glue;
      for (std::size_t i = 0; i < d.pattern_base.size(); ++i)
        glue.emplace_back(d.target_base[i], d.pattern_base[i]);
      AmalgamResult am = free_amalgam(out.result, d.pattern, glue, &mu);
      PointSet added = am.result.all() & ~out.result.all();

      BuildStep step{code, tbase, added, false};
      if (!in_Lmu(am.result, mu, 4).ok) {
        // The copy broke the bound: roll back and give up on this demand.
        step.rejected = true;
        out.log.push_back(std::move(step));
        out.unmet.push_back(di);
        break;
      }
      out.log.push_back(std::move(step));
      out.result = std::move(am.result);
      met = chi_of_demand(out.result, d) >= target_mu;
    }
  }

  // The seed must stay self-sufficient in the result.
  if (!DimOracle(out.result).is_strong(seed.all()))
    throw std::logic_error("build_generic: seed lost self-sufficiency");
  return out;
}

std::string format_build_log(const BuildResult& r) {
  std::ostringstream out;
  for (const BuildStep& s : r.log) {
    out << (s.rejected ? "rejected: " : "realized: ") << s.code_hex << " over "
        << r.result.format_set(s.over) << " as " << r.result.format_set(s.added)
        << "\n";
  }
  return out.str();
}

}  // namespace smc
