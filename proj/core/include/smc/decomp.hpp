#ifndef SMC_DECOMP_HPP
#define SMC_DECOMP_HPP

#include <optional>
#include <string>
#include <vector>

#include "smc/pairs.hpp"
#include "smc/structure.hpp"

namespace smc {

struct ChainStep {
  PointSet ext = 0;   // the points added by this step
  PointSet base = 0;  // the good-pair base of the step
};

// A chain I = X_0 <= X_1 <= ... <= X_r = points(s) where each step adds a
// 0-primitive extension, good over its base.
struct LinearDecomposition {
  const Structure* ambient = nullptr;
  PointSet start = 0;
  std::vector<PointSet> chain;  // r + 1 entries, chain[0] = start
  std::vector<ChainStep> steps;  // r entries; steps[t] extends chain[t]
};

// Deterministic decomposition from a self-sufficient start set: each step
// takes the smallest (then name-lexicographically least) 0-primitive
// extension of the current set.  Errors: NotStrongBase when I is not
// self-sufficient in s; Stuck when no 0-primitive step exists before the
// points are exhausted.
LinearDecomposition linear_decompose(const Structure& s, PointSet I);

// Swaps adjacent steps i and i+1 (0-based), re-verifying that both remain
// 0-primitive and good in the new order.  Requires step i+1's base to lie
// inside chain[i]; throws IllegalSwap when the swap breaks any condition.
LinearDecomposition reorder(const LinearDecomposition& ld, int i);

struct Petal {
  PointSet points = 0;
  PointSet base = 0;
  int stratum = 0;             // >= 1
  bool linear_cluster = false;  // single point on a shared line (LinearSpace)
  PointSet line = 0;            // its supporting line when linear_cluster
};

struct Cluster {
  int stratum = 0;
  PointSet base = 0;
  std::vector<PointSet> petals;  // petal point sets, insertion order
  int ell = 0;                   // number of petals
  int nu = 0;                    // disjoint copies inside the lower stratum
  std::optional<int> mu;         // bound for the pair, when a mu is given
  bool transitive = true;        // base stabilizer acts transitively on petals
};

struct TreeDecomposition {
  const Structure* ambient = nullptr;
  PointSet root = 0;                 // I
  std::vector<PointSet> zero_parts;  // trace of the empty set, then of each root point
  std::vector<PointSet> strata;      // A^0 .. A^height
  std::vector<Petal> petals;         // chain order
  std::vector<Cluster> clusters;     // sorted by (stratum, base, representative)
  // Petal indices grouped by shared supporting line (LinearSpace); petals
  // not on a shared line form singleton groups.
  std::vector<std::vector<int>> star_partition;
  // Cluster indices grouped by base orbits under the chosen stabilizer.
  std::vector<std::vector<int>> j_classes;
  int height = 0;
};

enum class StabilizerKind { Pointwise, Setwise };

// Strata, petals, clusters, and the per-cluster multiplicity accounting over
// the root set I.  A^0 is the union of the algebraic traces of the empty set
// and of each root point; each chain step lands in the stratum above the
// first one containing its base.  LinearSpace flavor places a single added
// point on an existing line into the stratum above the line's home and
// groups such petals into linear clusters.
//
// Errors: DependentBase when dim(I) < |I|; NotNormal when the chain cannot
// be completed (s is not generated over I by 0-primitive steps).
TreeDecomposition tree_decompose(const Structure& s, PointSet I,
                                 StabilizerKind group,
                                 const MuFunction* mu = nullptr);

// The unique stratum-(m-1) petal group meeting the given petal's base
// outside stratum m-2, if exactly one exists.  Requires stratum >= 2.
// Returns the representative petal index.
std::optional<int> determines(const TreeDecomposition& td, int petal_index);

struct Flower {
  std::vector<int> arrangement;  // images of the sorted base points
  std::vector<PointSet> petals;  // sorted distinct images of A
  std::vector<std::vector<PointSet>> certificates;  // maximal disjoint families
};

struct Bouquet {
  PointSet A = 0;
  PointSet B = 0;
  std::vector<Flower> flowers;
};

// Flowers over every arrangement of the pair's base realized by the setwise
// stabilizer of group_base (flowers with identical petal sets are listed
// once).  Petals are embeddings fixing the arrangement pointwise;
// certificates are the inclusion-maximal pairwise-disjoint petal families.
// The same-petal-implies-same-flower law is asserted.
Bouquet flowers_and_bouquet(const Structure& s, const GoodPair& gp,
                            PointSet group_base);

}  // namespace smc

#endif  // SMC_DECOMP_HPP
