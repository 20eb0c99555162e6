#include "smc/predim.hpp"

#include "smc/closure.hpp"

namespace smc {

LineSet line_set(const Structure& s) { return LineSet{s.full_lines()}; }

namespace {

void require_inside(const Structure& s, PointSet A, const char* what) {
  if ((A & ~s.all()) != 0)
    fail(Errc::UnknownPoint, std::string(what) + " uses point bits outside the structure");
}

}  // namespace

int rcount(const Structure& s, PointSet A, PointSet B, PointSet C) {
  require_inside(s, A, "rcount A");
  require_inside(s, B, "rcount B");
  require_inside(s, C, "rcount C");
  int count = 0;
  for (PointSet t : s.triples())
    if ((t & A) && (t & B) && (t & C)) ++count;
  return count;
}

int delta(const Structure& s, PointSet A) {
  require_inside(s, A, "delta");
  int npts = popcount(A);
  if (s.flavor() == Flavor::Hypergraph) {
    int inside = 0;
    for (PointSet t : s.triples())
      if ((t & A) == t) ++inside;
    return npts - inside;
  }
  int weight = 0;
  for (PointSet ln : s.full_lines()) {
    int k = popcount(ln & A);
    if (k >= 3) weight += k - 2;
  }
  return npts - weight;
}

int delta_rel(const Structure& s, PointSet B, PointSet A) {
  return delta(s, A | B) - delta(s, A);
}

int dim(const Structure& s, PointSet A) {
  require_inside(s, A, "dim");
  return DimOracle(s).dim(A);
}

IndependenceReport independence(const Structure& s, PointSet A, PointSet B,
                                PointSet C) {
  require_inside(s, A, "independence A");
  require_inside(s, B, "independence B");
  if ((A & B) != C)
    fail(Errc::BadIntersection,
         "A n B = " + s.format_set(A & B) + " but C = " + s.format_set(C));
  IndependenceReport rep{};
  rep.delta_independent = delta(s, A | B) == delta(s, A) + delta(s, B) - delta(s, C);
  rep.fully_independent = true;
  PointSet a_only = A & ~C, b_only = B & ~C;
  for (PointSet t : s.triples()) {
    if ((t & (A | B)) != t) continue;
    if ((t & a_only) && (t & b_only)) {
      rep.fully_independent = false;
      break;
    }
  }
  return rep;
}

bool check_flat(const Structure& s, const std::vector<PointSet>& F) {
  if (F.size() > 5)
    fail(Errc::TooManySets, "flatness families are capped at 5 sets, got " +
                                std::to_string(F.size()));
  for (PointSet f : F) require_inside(s, f, "check_flat");
  PointSet all = 0;
  for (PointSet f : F) all |= f;
  long rhs = 0;
  int m = static_cast<int>(F.size());
  for (unsigned T = 1; T < (1u << m); ++T) {
    PointSet inter = ~PointSet{0};
    for (int i = 0; i < m; ++i)
      if ((T >> i) & 1u) inter &= F[static_cast<size_t>(i)];
    inter &= s.all();
    int sign = (popcount(PointSet{T}) % 2 == 1) ? 1 : -1;
    rhs += sign * delta(s, inter);
  }
  return delta(s, all) <= rhs;
}

}  // namespace smc
