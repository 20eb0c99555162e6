#ifndef SMC_PREDIM_HPP
#define SMC_PREDIM_HPP

#include <vector>

#include "smc/structure.hpp"

namespace smc {

// Maximal relation-cliques of size >= 3 of a structure together with the
// support query used by the linear-space predimension.
struct LineSet {
  std::vector<PointSet> lines;

  // Lines meeting B in at least 2 points.
  std::vector<PointSet> support(PointSet B) const {
    std::vector<PointSet> out;
    for (PointSet ln : lines)
      if (popcount(ln & B) >= 2) out.push_back(ln);
    return out;
  }
};

// The line set of the whole structure (full lines).
LineSet line_set(const Structure& s);

// Number of unordered triples of s meeting each of A, B and C.
int rcount(const Structure& s, PointSet A, PointSet B, PointSet C);

// Predimension of the substructure induced on A:
//   Hypergraph:  |A| - (number of triples inside A)
//   LinearSpace: |A| - sum over induced lines of (length - 2)
// For linear spaces the induced lines are exactly the traces of full lines
// with at least 3 points in A (two points determine a line), so the sum runs
// over full-line traces.
int delta(const Structure& s, PointSet A);

// Relative predimension delta(A u B) - delta(A).
int delta_rel(const Structure& s, PointSet B, PointSet A);

// Dimension: the minimum of delta(Y) over all Y with A <= Y <= points(s).
// Exhaustive and exact; see DimOracle in closure.hpp for batched queries.
int dim(const Structure& s, PointSet A);

struct IndependenceReport {
  bool delta_independent;  // delta(A u B) = delta(A) + delta(B) - delta(C)
  bool fully_independent;  // no triple meets both A\C and B\C
};

// Both independence predicates for A, B with A n B = C (else BadIntersection).
IndependenceReport independence(const Structure& s, PointSet A, PointSet B,
                                PointSet C);

// The inclusion-exclusion flatness inequality
//   delta(union F_i) <= sum over nonempty T of (-1)^(|T|+1) delta(F_T),
// where F_T intersects the members indexed by T.  Families are capped at 5
// sets (TooManySets beyond that).
bool check_flat(const Structure& s, const std::vector<PointSet>& F);

}  // namespace smc

#endif  // SMC_PREDIM_HPP
