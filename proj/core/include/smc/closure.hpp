#ifndef SMC_CLOSURE_HPP
#define SMC_CLOSURE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "smc/structure.hpp"

namespace smc {

// Answers dim / icl / acl-trace queries over one ambient structure exactly,
// by exhaustive subset scans.  For hypergraph ambients the per-subset triple
// counts are precomputed once with a subset-sum sweep (one byte per subset);
// linear-space ambients are scanned directly per query.  Queries require
// n <= 26 (TooManyPoints beyond; the table would outgrow memory and the
// scans their time budget).
//
// Construction is cheap; the table is built lazily on the first query.
class DimOracle {
 public:
  explicit DimOracle(const Structure& s);

  const Structure& ambient() const noexcept { return *s_; }

  // Minimum delta(Y) over A <= Y <= points.
  int dim(PointSet A) const;

  // Intersection of all supersets of A achieving dim(A); verified to achieve
  // the minimum itself (a theorem for submodular predimensions).
  PointSet icl_set(PointSet A) const;

  // { a : dim(X u {a}) = dim(X) } - the algebraic-closure trace on a finite
  // ambient that is strong in its generic.
  PointSet acl_trace(PointSet X) const;

  bool is_strong(PointSet A) const;

 private:
  void ensure_table() const;
  int delta_of(PointSet Y) const;

  const Structure* s_;
  mutable std::vector<std::int8_t> triple_count_;  // hypergraph: per-subset triples
  mutable bool table_built_ = false;
};

// Audit record of an intrinsic-closure computation.
struct ClosureResult {
  PointSet input = 0;
  PointSet closure = 0;
  // Intermediate sets with their delta values: the input and the closure
  // (one entry when they coincide).
  std::vector<std::pair<PointSet, int>> chain;
};

// True iff delta(A) <= delta(C) for every C with A <= C <= points(s).
bool is_strong(const Structure& s, PointSet A);

// The smallest strong superset of A in s, with audit chain; its delta equals
// dim(s, A) and it is contained in every strong superset of A.
ClosureResult icl(const Structure& s, PointSet A);

// True iff every point outside X satisfies dim(X u {a}) > dim(X).
bool is_dclosed(const Structure& s, PointSet X);

// The d-fiber trace { a : dim(X u {a}) = dim(X) }.  Valid as an
// algebraic-closure trace only when s is strong in its generic ambient (the
// fixture registry certifies this; ad-hoc callers assert it themselves).
PointSet acl_trace(const Structure& s, PointSet X);

}  // namespace smc

#endif  // SMC_CLOSURE_HPP
