#ifndef SMC_DEFINABILITY_HPP
#define SMC_DEFINABILITY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "smc/search.hpp"
#include "smc/structure.hpp"

namespace smc {

enum class Verdict { Yes, No, Undetermined };
const char* verdict_name(Verdict v) noexcept;

enum class GroupKind { Pointwise, Setwise };

// How far the ambient is trusted to reflect the generic model: `pointwise` /
// `setwise` certify closure under the respective stabilizer's orbit map, so
// fixedness arguments yield definite answers; `assumed` runs the analysis
// with every positive verdict downgraded to undetermined.
struct NormalityCertificate {
  bool pointwise = false;
  bool setwise = false;
  bool assumed = false;

  bool any() const noexcept { return pointwise || setwise || assumed; }
};

// Per-element membership verdicts for the definable-closure variants over a
// base set I.  `yes` needs certification: the element is fixed by the full
// stabilizer and, for every proper subset J of I, either moved when only J
// is stabilized or split off by a dimension jump.  `no` is movement-based
// and always definite.
struct DclstarReport {
  std::vector<Verdict> dclstar;   // indexed by point
  std::vector<Verdict> sdclstar;  // indexed by point
  PointSet dclstar_trace = 0;     // points with verdict yes
  PointSet sdclstar_trace = 0;
  std::size_t pointwise_order = 0;  // |Aut fixing I pointwise|
  std::size_t setwise_order = 0;    // |Aut fixing I setwise|
  PointSet fixed_pointwise = 0;     // fixed points of the pointwise group
  PointSet fixed_setwise = 0;
};

DclstarReport classify_dclstar(const Structure& s, PointSet I,
                               const NormalityCertificate& cert);

struct ElementReport {
  int point = 0;
  PointSet orbit = 0;  // under the chosen group
  bool in_dcl = false;   // fixed by the pointwise stabilizer of I
  bool in_sdcl = false;  // fixed by the setwise stabilizer of I
  Verdict in_dclstar = Verdict::Undetermined;
  Verdict in_sdclstar = Verdict::Undetermined;
  bool safe = false;  // dim(orbit) >= 2 or orbit inside the trace of acl(empty)
};

struct OrbitReport {
  GroupKind group = GroupKind::Pointwise;
  bool certified = false;  // for the chosen group; otherwise assumed
  std::size_t group_order = 0;
  std::vector<PointSet> orbits;
  std::vector<ElementReport> per_element;
  PointSet fixed = 0;  // fixed points of the chosen group
  DclstarReport stars;
};

// Orbit partition and closure-membership analysis under the chosen
// stabilizer of I.  Errors: NoCertificate when the certificate carries
// neither a certified kind nor the assumed flag.
OrbitReport orbit_report(const Structure& s, PointSet I, GroupKind group,
                         const NormalityCertificate& cert);

struct QuasigroupReport {
  PointSet line = 0;
  PointSet base = 0;  // the chosen 2-subset I
  PointSet free = 0;  // line minus base
  std::size_t stabilizer_order = 0;  // |Aut fixing I pointwise|
  bool acts_full_symmetric = false;  // restriction to free is all of Sym(free)
  PointSet fixed_free = 0;           // free points fixed by the stabilizer
  int product_orbit = 0;             // orbit size of the first free point
  bool line_too_short = false;       // 3-point line
  bool definable_product = false;    // an invariant choice of product exists
  std::string verdict;  // "definable-product" or "no-definable-product"
};

// Tests whether a product of the two base points can be picked invariantly
// on the given full line: the pointwise stabilizer of the base acts on the
// line's free points, and a definable product needs a fixed one.  On a
// 3-point line the third point is fixed, so the product is definable there;
// longer lines report no-definable-product when the action is symmetric.
QuasigroupReport quasigroup_experiment(const Structure& s, PointSet line,
                                       PointSet I);

// Exhausts candidate code sets of at most max_size points: true when some
// candidate's setwise stabilizer equals the setwise stabilizer of I (the
// set codes I).  Used to check that an empty sdcl-trace really leaves I
// uncoded.
bool codes_base(const Structure& s, PointSet I, int max_size);

}  // namespace smc

#endif  // SMC_DEFINABILITY_HPP
