#ifndef SMC_STRUCTURE_HPP
#define SMC_STRUCTURE_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "smc/error.hpp"

namespace smc {

// A set of points, one bit per point index.  Structures are capped at
// kMaxPoints points so that every subset fits a machine word and subset
// scans stay exact.
using PointSet = std::uint32_t;

inline constexpr int kMaxPoints = 28;

inline int popcount(PointSet s) noexcept { return std::popcount(s); }

// Lowest set bit as a point index; undefined on empty sets.
inline int first_point(PointSet s) noexcept { return std::countr_zero(s); }

inline bool contains(PointSet s, int p) noexcept { return (s >> p) & 1u; }

inline PointSet point_bit(int p) noexcept { return PointSet{1} << p; }

// Iterate the points of a set in increasing index order.
template <typename Fn>
void for_each_point(PointSet s, Fn&& fn) {
  while (s != 0) {
    int p = std::countr_zero(s);
    s &= s - 1;
    fn(p);
  }
}

std::vector<int> points_of(PointSet s);

enum class Flavor { Hypergraph, LinearSpace };

// A finite 3-hypergraph or finite linear space: named points, a ternary
// relation stored as unordered 3-element point sets, and an optional
// designated base (an ordered list of point indices).
//
// Values are immutable after construction; every operation in the library
// is a pure function of its Structure arguments.
class Structure {
 public:
  // Assembles and validates a structure.  Triples are deduplicated clones
  // of the same set are rejected; LinearSpace flavor additionally enforces
  // that two points lie on at most one line (maximal relation-clique of
  // size >= 3).
  Structure(Flavor flavor, std::vector<std::string> points,
            std::vector<std::array<int, 3>> triples, std::vector<int> base);

  Flavor flavor() const noexcept { return flavor_; }
  int n() const noexcept { return static_cast<int>(names_.size()); }
  PointSet all() const noexcept { return n() == 0 ? 0 : (PointSet{1} << n()) - 1; }

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(int p) const { return names_.at(static_cast<size_t>(p)); }

  // Point index for a name; throws UnknownPoint for foreign names.
  int index_of(std::string_view name) const;

  // Sorted triple masks (each of population 3), in deterministic order.
  const std::vector<PointSet>& triples() const noexcept { return triples_; }

  // Ordered designated base (possibly empty) and its point set.
  const std::vector<int>& base() const noexcept { return base_; }
  PointSet base_set() const noexcept { return base_mask_; }

  // Maximal relation-cliques of size >= 3 of the whole structure, each as a
  // point set, sorted.  For LinearSpace flavor these are the full lines and
  // are precomputed at construction; for Hypergraph flavor they are computed
  // on first use.
  const std::vector<PointSet>& full_lines() const;

  // Point set for a list of names (throws UnknownPoint on foreign names).
  PointSet set_of_names(const std::vector<std::string>& names) const;

  // Names of a point set, sorted lexicographically.
  std::vector<std::string> names_of(PointSet s) const;

  // "{a1,b2,...}" with names sorted lexicographically.
  std::string format_set(PointSet s) const;

  bool has_triple(PointSet t) const;

  // Number of triples fully inside `within` that contain point p.
  int degree_within(int p, PointSet within) const;

  bool operator==(const Structure& other) const;

 private:
  Flavor flavor_;
  std::vector<std::string> names_;
  std::vector<PointSet> triples_;
  std::vector<int> base_;
  PointSet base_mask_ = 0;
  mutable std::vector<PointSet> lines_;  // lazily built for Hypergraph
  mutable bool lines_built_ = false;
};

// Parses the line-oriented structure-file grammar:
//
//   flavor: hypergraph|linear
//   points: p1 p2 ...
//   rel: p q r          (zero or more; unordered; duplicates are an error)
//   base: i1 i2 ...     (optional)
//   # comment           (anywhere; also trailing on a line)
//
// Throws ParseError, DuplicateTriplePoint, UnknownPoint, LinearityViolation,
// or TooManyPoints.
Structure parse(const std::string& text);

// Canonical text form; parse(serialize(s)) reproduces s exactly.
std::string serialize(const Structure& s);

// The induced substructure on `mask`.  Point order (and therefore the index
// remapping) follows the original order; the base is intersected with mask.
// remap_out, when non-null, receives old-index -> new-index (or -1).
Structure induced(const Structure& s, PointSet mask,
                  std::vector<int>* remap_out = nullptr);

// Maximal relation-cliques of size >= 3 of the substructure induced on
// `within`.  Exact for both flavors (depth-first clique extension).
std::vector<PointSet> lines_within(const Structure& s, PointSet within);

const char* flavor_name(Flavor f) noexcept;

}  // namespace smc

#endif  // SMC_STRUCTURE_HPP
