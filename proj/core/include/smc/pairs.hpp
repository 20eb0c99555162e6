#ifndef SMC_PAIRS_HPP
#define SMC_PAIRS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smc/search.hpp"
#include "smc/structure.hpp"

namespace smc {

// True iff `small` is strong inside the substructure induced on `big`:
// delta(small) <= delta(C) for every small <= C <= big.
bool is_strong_within(const Structure& s, PointSet small, PointSet big);

// A 0-primitive extension A over base B inside an ambient structure.  The
// base is derived from the extension's minimal 0-primitive ambient; `code`
// is the canonical isomorphism code of the (B, A)-marked induced pair, or a
// sentinel (leading '!') when the pair exceeds the canonization cap.
struct GoodPair {
  enum class Kind { Alpha, General };

  const Structure* ambient = nullptr;
  PointSet A = 0;
  PointSet B = 0;
  Kind kind = Kind::General;
  CanonCode code;
};

// Canonical code of the (B, A)-marked pair: canon of the substructure
// induced on A u B with marked sets [B, A].  Pairs beyond kMaxCanonPoints
// points get a sentinel code unique to their point sets.
CanonCode pair_code(const Structure& s, PointSet A, PointSet B);

// A bound on the copy-multiplicity of good pairs: an alpha value for
// single-point pairs over 2-point bases, explicit per-code entries, and a
// default rule applied to the base's predimension.
class MuFunction {
 public:
  enum class DefaultKind { DeltaOfBase, DeltaPlus };

  // File grammar (line-oriented, # comments):
  //   alpha: <int>                  (optional; must be >= 1)
  //   default: delta | delta+<k>    (optional)
  //   pair: <hex code> <int>        (zero or more)
  static MuFunction parse(const std::string& text);
  std::string serialize() const;

  // Bound for the pair A/B in s.  Resolution: explicit code entry first
  // (when the pair is codable), then the alpha rule for single-point pairs,
  // then the default rule on delta(B); UnresolvedCode when nothing applies.
  int value(const Structure& s, PointSet A, PointSet B) const;

  std::optional<int> alpha_value;
  std::map<std::string, int> explicit_codes;  // key: raw code bytes
  std::optional<std::pair<DefaultKind, int>> default_rule;
};

struct PrimitivityWitness {
  bool primitive = false;
  // When primitivity fails on the intermediate-set condition, a violating
  // nonempty proper subset A0 with D <= D u A0 <= D u A.
  std::optional<PointSet> intermediate;
  std::string reason;  // empty when primitive

  explicit operator bool() const { return primitive; }
};

// Whether A is a 0-primitive extension of D: D <= D u A, delta(A/D) = 0, and
// no nonempty proper A0 < A has D <= D u A0 <= D u A.  Throws EmptyExtension
// when A is empty; requires A n D empty.
PrimitivityWitness is_primitive(const Structure& s, PointSet A, PointSet D);

// Base of the 0-primitive extension A over D (NotPrimitive otherwise).
//   Hypergraph: the points of D in triples meeting A inside A u D - the
//     minimal base, which coincides with the maximal related subset.
//   LinearSpace, |A| >= 2: the points of D on a line with >= 2 points of A.
//   LinearSpace, |A| = 1: the lexicographically least (by point name)
//     2-subset of the supporting line's D-part; the full intersection is
//     available via extended_base.
PointSet find_base(const Structure& s, PointSet A, PointSet D);

// The supporting line's intersection with D for a single alpha point a over
// D (LinearSpace flavor).  NotAlphaPoint when no line through a meets D in
// >= 2 points (or on hypergraph input); Ambiguous when two do.
PointSet extended_base(const Structure& s, int a, PointSet D);

// Every good pair (A, B) of s with |A| <= max_ext (<= 6), where A is
// 0-primitive over its complement and good over the derived base B.  Pairs
// appear in extension-size-then-index order.  The `_all` variant keeps every
// concrete pair; enumerate_good_pairs deduplicates by canonical code,
// keeping the first representative.
std::vector<GoodPair> enumerate_good_pairs_all(const Structure& s, int max_ext);
std::vector<GoodPair> enumerate_good_pairs(const Structure& s, int max_ext);

// All images of A over pointwise-fixed B in s (embeddings of the induced
// pair substructure), as sorted distinct A-image point sets.
std::vector<PointSet> copies_over_base(const Structure& s, PointSet A, PointSet B);

// Exact maximum number of pairwise-disjoint sets from the list.
int max_disjoint_count(const std::vector<PointSet>& sets);

// All inclusion-maximal pairwise-disjoint subfamilies, sorted.
std::vector<std::vector<PointSet>> maximal_disjoint_families(
    const std::vector<PointSet>& sets);

// chi: the maximum number of pairwise-disjoint images of A over pointwise-
// fixed B in s.
int chi(const Structure& s, PointSet A, PointSet B);
int chi(const Structure& s, const GoodPair& gp);

struct LmuViolation {
  PointSet A = 0;
  PointSet B = 0;
  int chi_value = 0;
  int mu_bound = 0;
};

struct LmuReport {
  bool ok = true;
  std::vector<LmuViolation> violations;
};

// Checks chi <= mu for every good pair with |A| <= max_ext.
LmuReport in_Lmu(const Structure& s, const MuFunction& mu, int max_ext);

// The "triples" condition: mu >= 3 for every catalog pair with
// delta(B) = 2 and |A| > 1.  LinearSpace flavor quantifies over non-linear
// pairs only (extensions not lying on a single line through the base).
bool mu_triples(const MuFunction& mu, const std::vector<GoodPair>& catalog);

// Rule-level "triples" test on the function definition itself: true when
// the default rule guarantees >= 3 on every delta-2 base and no explicit
// entry undercuts 3.  Alpha entries are exempt (single-point extensions).
bool mu_triples(const MuFunction& mu);

// Whether A is connected over B: the graph on A joining points that share a
// triple inside A u B has one component.
bool connected_over_base(const Structure& s, PointSet A, PointSet B);

}  // namespace smc

#endif  // SMC_PAIRS_HPP
