#ifndef SMC_AMALGAM_HPP
#define SMC_AMALGAM_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "smc/pairs.hpp"
#include "smc/structure.hpp"

namespace smc {

struct AmalgamResult {
  Structure result;
  // Factor index -> result index.  Left factor points keep their indices;
  // right factor points outside the glue are appended in order.
  std::vector<int> left_embed;
  std::vector<int> right_embed;
  // Cross-factor point pairs (result indices, left first) placed on a common
  // line by line merging.  Empty for the hypergraph flavor.
  std::vector<std::pair<int, int>> identified;
};

// The free amalgam of A and B over the glue map (pairs of A index ->
// B index identifying a common induced substructure C).
//   Hypergraph: disjoint union over C; no new triples.
//   LinearSpace: disjoint union, then every pair of factor lines sharing a
//     2-point trace in C merges into one line (all 3-subsets added).  C must
//     be self-sufficient in A for the merge to be well defined.
// delta(result) = delta(A) + delta(B) - delta(C) is asserted.
//
// Errors: BadGlue when C is not a common induced substructure (or, in the
// LinearSpace flavor, not self-sufficient in A); LineOverflow when mu is
// supplied with an alpha value and a merged line would exceed alpha + 2
// points.  Without mu, raw amalgams are unconstrained.
AmalgamResult free_amalgam(const Structure& A, const Structure& B,
                           const std::vector<std::pair<int, int>>& glue,
                           const MuFunction* mu = nullptr);

// A request to drive the multiplicity of one pair type up to its mu bound:
// realize fresh copies of pattern's non-base points over the target until
// chi equals mu.  pattern_base lists the base inside the pattern;
// target_base lists the matching points of the seed, in the same order.
struct BuildDemand {
  Structure pattern;
  std::vector<int> pattern_base;
  std::vector<int> target_base;
};

// Convenience constructors: a single related point over a 2-point base of
// the seed, and a copy of an existing seed extension A over B.
BuildDemand alpha_demand(const Structure& seed, PointSet base_pair);
BuildDemand copy_demand(const Structure& seed, PointSet A, PointSet B);

struct BuildStep {
  std::string code_hex;   // canonical code of the realized pair
  PointSet over = 0;      // base, in result indices
  PointSet added = 0;     // fresh points, in result indices
  bool rejected = false;  // step broke the mu bound and was rolled back
};

struct BuildResult {
  Structure result;
  std::vector<BuildStep> log;
  // Demands that could not be driven to chi = mu within the point budget
  // (partial result retained).
  bool budget_exhausted = false;
  std::vector<std::size_t> unmet;
};

// Bounded approximation of the generic model: starting from a seed already
// satisfying the mu bound, repeatedly free-amalgamates fresh copies of the
// demanded pair types (FIFO) until each reaches chi = mu, verifying the mu
// bound after every step and rolling back violations.  The seed embeds as
// an initial segment and stays self-sufficient in the result.
//
// budget caps the total point count (at most 24).  Errors:
// SeedNotAdmissible when the seed breaks the mu bound; budget overruns are
// reported in the result rather than thrown, so the partial structure
// survives.  Deterministic: equal inputs give equal outputs.
BuildResult build_generic(const Structure& seed, const MuFunction& mu,
                          int budget,
                          const std::vector<BuildDemand>& demands = {});

// One line per step: "realized: <code> over {...} as {...}" (rejected steps
// say "rejected:").
std::string format_build_log(const BuildResult& r);

}  // namespace smc

#endif  // SMC_AMALGAM_HPP
