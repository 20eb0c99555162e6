#include "smc/definability.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "smc/closure.hpp"
#include "smc/predim.hpp"

namespace smc {

const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Undetermined: return "undetermined";
  }
  return "?";
}

namespace {

bool fixes_pointwise(const Perm& g, PointSet A) {
  bool ok = true;
  for_each_point(A, [&](int p) {
    if (g[static_cast<std::size_t>(p)] != p) ok = false;
  });
  return ok;
}

PointSet image_set(const Perm& g, PointSet A) {
  PointSet out = 0;
  for_each_point(A, [&](int p) { out |= point_bit(g[static_cast<std::size_t>(p)]); });
  return out;
}

PointSet fixed_of(const Structure& s, const std::vector<Perm>& G) {
  PointSet out = 0;
  for (int p = 0; p < s.n(); ++p) {
    bool fixed = true;
    for (const Perm& g : G) {
      if (g[static_cast<std::size_t>(p)] != p) {
        fixed = false;
        break;
      }
    }
    if (fixed) out |= point_bit(p);
  }
  return out;
}

// Movement-or-dimension verdicts for one group kind.  A cache of stabilizers
// of proper subsets J of I is shared across the elements of one call.
std::vector<Verdict> star_verdicts(const Structure& s, PointSet I,
                                   GroupKind kind, bool certified,
                                   const std::vector<Perm>& G, PointSet fixed,
                                   DimOracle& dq) {
  std::vector<Verdict> out(static_cast<std::size_t>(s.n()),
                           Verdict::Undetermined);
  std::vector<PointSet> proper;  // every proper subset of I
  if (I != 0) {
    for (PointSet J = (I - 1) & I;; J = (J - 1) & I) {
      proper.push_back(J);
      if (J == 0) break;
    }
  }
  std::map<PointSet, std::vector<Perm>> stab_cache;
  std::map<PointSet, int> dim_cache;
  auto stab = [&](PointSet J) -> const std::vector<Perm>& {
    auto it = stab_cache.find(J);
    if (it != stab_cache.end()) return it->second;
    std::vector<Perm> g =
        kind == GroupKind::Pointwise
            ? automorphisms(s, J)
            : automorphisms(s, PointSet{0},
                            J != 0 ? std::vector<PointSet>{J}
                                   : std::vector<PointSet>{});
    return stab_cache.emplace(J, std::move(g)).first->second;
  };
  auto dim_of = [&](PointSet m) {
    auto it = dim_cache.find(m);
    if (it != dim_cache.end()) return it->second;
    const int d = dq.dim(m);
    dim_cache.emplace(m, d);
    return d;
  };

  for (int e = 0; e < s.n(); ++e) {
    if (!contains(fixed, e)) {
      out[static_cast<std::size_t>(e)] = Verdict::No;
      continue;
    }
    if (kind == GroupKind::Pointwise && contains(I, e) && popcount(I) >= 2) {
      // A base point is trivially fixed when the whole base is; with another
      // base point present it is not pinned down by the closure operator.
      out[static_cast<std::size_t>(e)] = Verdict::No;
      continue;
    }
    if (!certified) continue;  // stays undetermined
    bool all_excluded = true;
    for (PointSet J : proper) {
      bool moved = false;
      for (const Perm& g : stab(J)) {
        if (g[static_cast<std::size_t>(e)] != e) {
          moved = true;
          break;
        }
      }
      if (moved) continue;
      if (dim_of(J | point_bit(e)) > dim_of(J)) continue;
      all_excluded = false;
      break;
    }
    out[static_cast<std::size_t>(e)] =
        all_excluded ? Verdict::Yes : Verdict::Undetermined;
  }
  return out;
}

void require_cert(const NormalityCertificate& cert) {
  if (!cert.any())
    fail(Errc::NoCertificate,
         "the structure carries no normality certificate and none was assumed");
}

}  // namespace

DclstarReport classify_dclstar(const Structure& s, PointSet I,
                               const NormalityCertificate& cert) {
  if ((I & ~s.all()) != 0)
    fail(Errc::UnknownPoint, "classify_dclstar: base point out of range");
  require_cert(cert);
  DimOracle dq(s);
  DclstarReport rep;

  const std::vector<Perm> Gpw = automorphisms(s, I);
  const std::vector<Perm> Gsw =
      I != 0 ? automorphisms(s, PointSet{0}, std::vector<PointSet>{I})
             : automorphisms(s);
  rep.pointwise_order = Gpw.size();
  rep.setwise_order = Gsw.size();
  rep.fixed_pointwise = fixed_of(s, Gpw);
  rep.fixed_setwise = fixed_of(s, Gsw);

  rep.dclstar = star_verdicts(s, I, GroupKind::Pointwise, cert.pointwise, Gpw,
                              rep.fixed_pointwise, dq);
  rep.sdclstar = star_verdicts(s, I, GroupKind::Setwise, cert.setwise, Gsw,
                               rep.fixed_setwise, dq);
  for (int p = 0; p < s.n(); ++p) {
    if (rep.dclstar[static_cast<std::size_t>(p)] == Verdict::Yes)
      rep.dclstar_trace |= point_bit(p);
    if (rep.sdclstar[static_cast<std::size_t>(p)] == Verdict::Yes)
      rep.sdclstar_trace |= point_bit(p);
  }
  return rep;
}

OrbitReport orbit_report(const Structure& s, PointSet I, GroupKind group,
                         const NormalityCertificate& cert) {
  if ((I & ~s.all()) != 0)
    fail(Errc::UnknownPoint, "orbit_report: base point out of range");
  require_cert(cert);
  OrbitReport rep;
  rep.group = group;
  rep.certified = group == GroupKind::Pointwise ? cert.pointwise : cert.setwise;
  rep.stars = classify_dclstar(s, I, cert);

  const std::vector<Perm> G =
      group == GroupKind::Pointwise
          ? automorphisms(s, I)
          : (I != 0 ? automorphisms(s, PointSet{0}, std::vector<PointSet>{I})
                    : automorphisms(s));
  rep.group_order = G.size();
  rep.orbits = orbits(s, G);
  rep.fixed = group == GroupKind::Pointwise ? rep.stars.fixed_pointwise
                                            : rep.stars.fixed_setwise;

  DimOracle dq(s);
  const PointSet trace0 = dq.acl_trace(0);
  std::vector<PointSet> orbit_of(static_cast<std::size_t>(s.n()));
  for (PointSet orb : rep.orbits)
    for_each_point(orb, [&](int p) { orbit_of[static_cast<std::size_t>(p)] = orb; });

  for (int p = 0; p < s.n(); ++p) {
    ElementReport er;
    er.point = p;
    er.orbit = orbit_of[static_cast<std::size_t>(p)];
    er.in_dcl = contains(rep.stars.fixed_pointwise, p);
    er.in_sdcl = contains(rep.stars.fixed_setwise, p);
    er.in_dclstar = rep.stars.dclstar[static_cast<std::size_t>(p)];
    er.in_sdclstar = rep.stars.sdclstar[static_cast<std::size_t>(p)];
    er.safe = (er.orbit & ~trace0) == 0 || dq.dim(er.orbit) >= 2;
    rep.per_element.push_back(er);
  }
  return rep;
}

QuasigroupReport quasigroup_experiment(const Structure& s, PointSet line,
                                       PointSet I) {
  if (((line | I) & ~s.all()) != 0)
    fail(Errc::UnknownPoint, "quasigroup_experiment: point out of range");
  if (s.flavor() != Flavor::LinearSpace)
    throw std::invalid_argument("quasigroup_experiment: linear flavor required");
  const auto& lines = s.full_lines();
  if (std::find(lines.begin(), lines.end(), line) == lines.end())
    throw std::invalid_argument("quasigroup_experiment: the set is not a full line");
  if (popcount(I) != 2 || (I & ~line) != 0)
    throw std::invalid_argument(
        "quasigroup_experiment: the base must be a 2-subset of the line");
  if (DimOracle(s).dim(I) != 2)
    throw std::invalid_argument("quasigroup_experiment: the base is dependent");

  QuasigroupReport rep;
  rep.line = line;
  rep.base = I;
  rep.free = line & ~I;
  rep.line_too_short = popcount(line) == 3;

  const std::vector<Perm> G = automorphisms(s, I);
  rep.stabilizer_order = G.size();
  rep.fixed_free = fixed_of(s, G) & rep.free;

  const std::vector<int> free_pts = points_of(rep.free);
  std::set<std::vector<int>> restrictions;
  for (const Perm& g : G) {
    std::vector<int> r;
    r.reserve(free_pts.size());
    for (int p : free_pts) r.push_back(g[static_cast<std::size_t>(p)]);
    restrictions.insert(std::move(r));
  }
  std::size_t factorial = 1;
  for (std::size_t i = 2; i <= free_pts.size(); ++i) factorial *= i;
  rep.acts_full_symmetric = restrictions.size() == factorial;

  std::set<int> orbit{free_pts[0]};
  for (const Perm& g : G) orbit.insert(g[static_cast<std::size_t>(free_pts[0])]);
  rep.product_orbit = static_cast<int>(orbit.size());

  rep.definable_product = rep.fixed_free != 0;
  rep.verdict = rep.definable_product ? "definable-product" : "no-definable-product";
  return rep;
}

bool codes_base(const Structure& s, PointSet I, int max_size) {
  const std::vector<Perm> G = automorphisms(s);
  std::vector<Perm> S;  // the setwise stabilizer of I
  for (const Perm& g : G)
    if (image_set(g, I) == I) S.push_back(g);
  // A code must be pointwise-fixed by S, so search inside S's fixed points.
  const PointSet F = fixed_of(s, S);
  std::vector<int> fpts = points_of(F);

  // Every candidate C <= F with |C| <= max_size, the empty set included.
  std::vector<PointSet> cands{0};
  for (int p : fpts) {
    const std::size_t limit = cands.size();
    for (std::size_t i = 0; i < limit; ++i) {
      if (popcount(cands[i]) < max_size) cands.push_back(cands[i] | point_bit(p));
    }
  }
  for (PointSet C : cands) {
    bool codes = true;
    for (const Perm& g : G) {
      if (fixes_pointwise(g, C) && image_set(g, I) != I) {
        codes = false;
        break;
      }
    }
    if (codes) return true;
  }
  return false;
}

}  // namespace smc
