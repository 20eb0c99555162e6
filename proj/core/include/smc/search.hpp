#ifndef SMC_SEARCH_HPP
#define SMC_SEARCH_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "smc/structure.hpp"

namespace smc {

// An injective induced-substructure map between two structures: the image
// carries a triple exactly when the source does.  `map[p]` is the image of
// source point p.  `src`/`dst` are non-owning; the caller keeps both
// structures alive for the embedding's lifetime.
struct Embedding {
  const Structure* src = nullptr;
  const Structure* dst = nullptr;
  std::vector<int> map;

  PointSet image_of(PointSet source_points) const {
    PointSet out = 0;
    for_each_point(source_points,
                   [&](int p) { out |= point_bit(map[static_cast<size_t>(p)]); });
    return out;
  }
};

// A permutation of a structure's points (an automorphism when produced by
// automorphisms()).
using Perm = std::vector<int>;

// All induced-substructure embeddings of src into dst extending the partial
// map `fixed` (pairs of src index -> dst index).  Each src point listed in a
// `setwise` constraint must land inside the paired dst set.  The result is
// sorted lexicographically by image tuple (dst indices in src point order),
// so the order is deterministic.
//
// The search prunes by triple-degree compatibility (equality when src and
// dst are the same object, since automorphisms preserve degrees) and orders
// points connectivity-first; results are exhaustive.
std::vector<Embedding> embeddings(
    const Structure& src, const Structure& dst,
    const std::vector<std::pair<int, int>>& fixed = {},
    const std::vector<std::pair<PointSet, PointSet>>& setwise = {});

// All automorphisms fixing `pointwise` elementwise and every set in
// `setwise` as a set.  Contains the identity; closed under composition and
// inverse (it is the full stabilizer subgroup).
std::vector<Perm> automorphisms(const Structure& s, PointSet pointwise = 0,
                                const std::vector<PointSet>& setwise = {});

// Single-setwise-set convenience matching the two-point-set operation shape;
// pointwise fixing already implies membership of each fixed point's image in
// any set containing it, so pointwise need not be a subset of setwise here.
std::vector<Perm> automorphisms(const Structure& s, PointSet pointwise,
                                PointSet setwise);

// Orbit partition of the points under a permutation list, each orbit a
// PointSet, sorted by smallest member.
std::vector<PointSet> orbits(const Structure& s, const std::vector<Perm>& perms);

// Points fixed by every permutation in the list.
PointSet fixed_points(const Structure& s, const std::vector<Perm>& perms);

// Canonical code of a structure with an ordered list of marked subsets: two
// marked structures have equal codes exactly when a marking-preserving
// isomorphism exists.  Computed by exhaustive minimization over point
// relabelings with prefix pruning; inputs are capped at 10 points and 8
// marked sets (throws TooManyPoints / std::invalid_argument).
struct CanonCode {
  std::string bytes;
  auto operator<=>(const CanonCode&) const = default;
};

inline constexpr int kMaxCanonPoints = 10;

CanonCode canon(const Structure& s, const std::vector<PointSet>& marked = {});

// Lowercase hex rendering of a code, and its inverse (throws ParseError on
// odd length or non-hex digits).  Used by the mu-file `pair:` grammar.
std::string to_hex(const CanonCode& code);
CanonCode from_hex(const std::string& hex);

}  // namespace smc

#endif  // SMC_SEARCH_HPP
