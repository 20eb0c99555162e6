#include "smc/pairs.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

#include "smc/predim.hpp"

namespace smc {

namespace {

void require_inside(const Structure& s, PointSet A, const char* what) {
  if ((A & ~s.all()) != 0) fail(Errc::UnknownPoint, std::string(what) + ": point index out of range");
}

}  // namespace

bool is_strong_within(const Structure& s, PointSet small, PointSet big) {
  require_inside(s, big, "is_strong_within");
  if ((small & ~big) != 0)
    throw std::invalid_argument("is_strong_within: small must lie inside big");
  const int d_small = delta(s, small);
  const PointSet extra = big & ~small;
  PointSet sub = extra;
  for (;;) {
    if (delta(s, small | sub) < d_small) return false;
    if (sub == 0) break;
    sub = (sub - 1) & extra;
  }
  return true;
}

PrimitivityWitness is_primitive(const Structure& s, PointSet A, PointSet D) {
  require_inside(s, A | D, "is_primitive");
  if (A == 0) fail(Errc::EmptyExtension, "is_primitive: extension is empty");
  if ((A & D) != 0)
    throw std::invalid_argument("is_primitive: extension meets its base");

  PrimitivityWitness w;
  if (delta_rel(s, A, D) != 0) {
    w.reason = "delta(A/D) is nonzero";
    return w;
  }
  if (!is_strong_within(s, D, D | A)) {
    w.reason = "D is not self-sufficient in D u A";
    return w;
  }
  PointSet sub = A;
  for (;;) {
    sub = (sub - 1) & A;
    if (sub == 0) break;
    if (is_strong_within(s, D, D | sub) &&
        is_strong_within(s, D | sub, D | A)) {
      w.intermediate = sub;
      w.reason = "proper intermediate self-sufficient extension exists";
      return w;
    }
  }
  w.primitive = true;
  return w;
}

namespace {

// Supporting lines of the single point `a` over D: induced lines of {a} u D
// through a meeting D in >= 2 points.
std::vector<PointSet> supporting_lines(const Structure& s, int a, PointSet D) {
  std::vector<PointSet> out;
  const PointSet am = point_bit(a);
  for (PointSet ln : lines_within(s, am | D)) {
    if ((ln & am) != 0 && popcount(ln & D) >= 2) out.push_back(ln);
  }
  return out;
}

// Name-lexicographically least 2-subset of `ext` (assumed >= 2 points).
PointSet least_name_pair(const Structure& s, PointSet ext) {
  std::vector<int> pts = points_of(ext);
  std::sort(pts.begin(), pts.end(), [&](int x, int y) {
    return s.name(x) < s.name(y);
  });
  return point_bit(pts[0]) | point_bit(pts[1]);
}

}  // namespace

PointSet find_base(const Structure& s, PointSet A, PointSet D) {
  if (!is_primitive(s, A, D))
    fail(Errc::NotPrimitive, "find_base: extension is not 0-primitive over its ambient");

  if (s.flavor() == Flavor::Hypergraph) {
    PointSet b = 0;
    for (PointSet t : s.triples()) {
      if ((t & A) != 0 && (t & ~(A | D)) == 0) b |= t & D;
    }
    return b;
  }

  if (popcount(A) >= 2) {
    PointSet b = 0;
    for (PointSet ln : lines_within(s, A | D)) {
      if (popcount(ln & A) >= 2) b |= ln & D;
    }
    return b;
  }

  const int a = first_point(A);
  const std::vector<PointSet> lines = supporting_lines(s, a, D);
  if (lines.empty())
    fail(Errc::NotAlphaPoint, "find_base: no line through " + s.name(a) +
                                  " meets the ambient in two points");
  if (lines.size() > 1)
    fail(Errc::Ambiguous, "find_base: " + s.name(a) +
                              " sits on more than one supporting line");
  return least_name_pair(s, lines[0] & D);
}

PointSet extended_base(const Structure& s, int a, PointSet D) {
  if (a < 0 || a >= s.n()) fail(Errc::UnknownPoint, "extended_base: point index out of range");
  require_inside(s, D, "extended_base");
  if (contains(D, a))
    throw std::invalid_argument("extended_base: the point lies in its own base set");
  if (s.flavor() != Flavor::LinearSpace)
    fail(Errc::NotAlphaPoint, "extended_base: " + s.name(a) +
                                  " is a hypergraph point; no supporting line exists");
  const std::vector<PointSet> lines = supporting_lines(s, a, D);
  if (lines.empty())
    fail(Errc::NotAlphaPoint, "extended_base: no line through " + s.name(a) +
                                  " meets the base set in two points");
  if (lines.size() > 1)
    fail(Errc::Ambiguous, "extended_base: " + s.name(a) +
                              " sits on more than one supporting line");
  return lines[0] & D;
}

CanonCode pair_code(const Structure& s, PointSet A, PointSet B) {
  require_inside(s, A | B, "pair_code");
  if (popcount(A | B) <= kMaxCanonPoints) {
    std::vector<int> remap;
    Structure sub = induced(s, A | B, &remap);
    PointSet newB = 0, newA = 0;
    for_each_point(B, [&](int p) { newB |= point_bit(remap[p]); });
    for_each_point(A, [&](int p) { newA |= point_bit(remap[p]); });
    return canon(sub, {newB, newA});
  }
  // Too large to canonize: a sentinel unique to the concrete pair.  Real
  // codes never start with '!', so sentinels compare unequal to them.
  CanonCode c;
  c.bytes = "!" + s.format_set(B) + "|" + s.format_set(A);
  return c;
}

namespace {

GoodPair::Kind classify_kind(const Structure& s, PointSet A, PointSet B) {
  if (popcount(A) == 1 && popcount(B) == 2 && s.has_triple(A | B))
    return GoodPair::Kind::Alpha;
  return GoodPair::Kind::General;
}

// Runs fn(combo_mask) over all k-subsets of the n point indices in
// lexicographic index order.
template <typename Fn>
void for_each_combination(int n, int k, Fn&& fn) {
  if (k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    PointSet m = 0;
    for (int v : idx) m |= point_bit(v);
    fn(m);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<GoodPair> enumerate_good_pairs_all(const Structure& s, int max_ext) {
  if (max_ext < 1 || max_ext > 6)
    throw std::invalid_argument("enumerate_good_pairs: max_ext must be between 1 and 6");
  std::vector<GoodPair> out;
  const PointSet full = s.all();
  for (int k = 1; k <= max_ext; ++k) {
    for_each_combination(s.n(), k, [&](PointSet A) {
      const PointSet D = full & ~A;
      if (!is_primitive(s, A, D)) return;
      const PointSet B = find_base(s, A, D);
      // Goodness over the derived base itself.
      if (delta_rel(s, A, B) != 0) return;
      if (!is_primitive(s, A, B)) return;
      GoodPair gp;
      gp.ambient = &s;
      gp.A = A;
      gp.B = B;
      gp.kind = classify_kind(s, A, B);
      gp.code = pair_code(s, A, B);
      out.push_back(std::move(gp));
    });
  }
  return out;
}

std::vector<GoodPair> enumerate_good_pairs(const Structure& s, int max_ext) {
  std::vector<GoodPair> all = enumerate_good_pairs_all(s, max_ext);
  std::vector<GoodPair> out;
  std::set<std::string> seen;
  for (GoodPair& gp : all) {
    if (seen.insert(gp.code.bytes).second) out.push_back(std::move(gp));
  }
  return out;
}

std::vector<PointSet> copies_over_base(const Structure& s, PointSet A, PointSet B) {
  require_inside(s, A | B, "copies_over_base");
  if ((A & B) != 0)
    throw std::invalid_argument("copies_over_base: extension meets its base");
  std::vector<int> remap;
  Structure sub = induced(s, A | B, &remap);
  std::vector<std::pair<int, int>> fixed;
  for_each_point(B, [&](int p) { fixed.emplace_back(remap[p], p); });
  std::vector<int> apts;
  for_each_point(A, [&](int p) { apts.push_back(remap[p]); });
  std::set<PointSet> images;
  for (const Embedding& e : embeddings(sub, s, fixed)) {
    PointSet img = 0;
    for (int p : apts) img |= point_bit(e.map[p]);
    images.insert(img);
  }
  return std::vector<PointSet>(images.begin(), images.end());
}

namespace {

void disjoint_rec(const std::vector<PointSet>& sets, std::size_t i,
                  std::vector<PointSet>& cur, PointSet curmask,
                  std::vector<PointSet>& best) {
  if (cur.size() + (sets.size() - i) <= best.size()) return;
  if (i == sets.size()) {
    if (cur.size() > best.size()) best = cur;
    return;
  }
  if ((sets[i] & curmask) == 0) {
    cur.push_back(sets[i]);
    disjoint_rec(sets, i + 1, cur, curmask | sets[i], best);
    cur.pop_back();
  }
  disjoint_rec(sets, i + 1, cur, curmask, best);
}

void families_rec(const std::vector<PointSet>& sets, std::size_t i,
                  std::vector<PointSet>& cur, PointSet curmask,
                  std::set<std::vector<PointSet>>& out) {
  if (i == sets.size()) {
    for (PointSet sset : sets) {
      const bool used =
          std::find(cur.begin(), cur.end(), sset) != cur.end();
      if (!used && (sset & curmask) == 0) return;  // extendable: not maximal
    }
    out.insert(cur);
    return;
  }
  if ((sets[i] & curmask) == 0) {
    cur.push_back(sets[i]);
    families_rec(sets, i + 1, cur, curmask | sets[i], out);
    cur.pop_back();
  }
  families_rec(sets, i + 1, cur, curmask, out);
}

}  // namespace

int max_disjoint_count(const std::vector<PointSet>& sets) {
  std::vector<PointSet> cur, best;
  disjoint_rec(sets, 0, cur, 0, best);
  return static_cast<int>(best.size());
}

std::vector<std::vector<PointSet>> maximal_disjoint_families(
    const std::vector<PointSet>& sets) {
  std::set<std::vector<PointSet>> out;
  std::vector<PointSet> cur;
  families_rec(sets, 0, cur, 0, out);
  return std::vector<std::vector<PointSet>>(out.begin(), out.end());
}

int chi(const Structure& s, PointSet A, PointSet B) {
  return max_disjoint_count(copies_over_base(s, A, B));
}

int chi(const Structure& s, const GoodPair& gp) { return chi(s, gp.A, gp.B); }

// --------------------------------------------------------------------------
// mu functions

MuFunction MuFunction::parse(const std::string& text) {
  MuFunction mu;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    // Trim.
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);

    const auto colon = line.find(':');
    if (colon == std::string::npos)
      fail(Errc::ParseError, "mu line " + std::to_string(lineno) + ": expected 'key: value'");
    const std::string key = line.substr(0, colon);
    std::string rest = line.substr(colon + 1);
    const auto rb = rest.find_first_not_of(" \t");
    rest = (rb == std::string::npos) ? std::string() : rest.substr(rb);

    auto parse_int = [&](const std::string& tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        fail(Errc::ParseError, "mu line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
      }
      if (used != tok.size())
        fail(Errc::ParseError, "mu line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
      return v;
    };

    if (key == "alpha") {
      const int v = parse_int(rest);
      if (v < 1)
        fail(Errc::ParseError, "mu line " + std::to_string(lineno) + ": alpha must be at least 1");
      mu.alpha_value = v;
    } else if (key == "default") {
      if (rest == "delta") {
        mu.default_rule = {DefaultKind::DeltaOfBase, 0};
      } else if (rest.rfind("delta+", 0) == 0) {
        const int k = parse_int(rest.substr(6));
        if (k < 0)
          fail(Errc::ParseError, "mu line " + std::to_string(lineno) + ": default offset must be nonnegative");
        mu.default_rule = {DefaultKind::DeltaPlus, k};
      } else {
        fail(Errc::ParseError, "mu line " + std::to_string(lineno) +
                                   ": default must be 'delta' or 'delta+<k>'");
      }
    } else if (key == "pair") {
      std::istringstream ps(rest);
      std::string hex, num, extra;
      if (!(ps >> hex >> num) || (ps >> extra))
        fail(Errc::ParseError, "mu line " + std::to_string(lineno) + ": expected 'pair: <hex> <int>'");
      const int v = parse_int(num);
      if (v < 1)
        fail(Errc::ParseError, "mu line " + std::to_string(lineno) + ": pair value must be at least 1");
      mu.explicit_codes[from_hex(hex).bytes] = v;
    } else {
      fail(Errc::ParseError, "mu line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  return mu;
}

std::string MuFunction::serialize() const {
  std::ostringstream out;
  if (alpha_value) out << "alpha: " << *alpha_value << "\n";
  if (default_rule) {
    out << "default: delta";
    if (default_rule->first == DefaultKind::DeltaPlus) out << "+" << default_rule->second;
    out << "\n";
  }
  for (const auto& [bytes, v] : explicit_codes) {
    CanonCode c;
    c.bytes = bytes;
    out << "pair: " << to_hex(c) << " " << v << "\n";
  }
  return out.str();
}

int MuFunction::value(const Structure& s, PointSet A, PointSet B) const {
  require_inside(s, A | B, "mu value");
  if (!explicit_codes.empty() && popcount(A | B) <= kMaxCanonPoints) {
    const CanonCode c = pair_code(s, A, B);
    const auto it = explicit_codes.find(c.bytes);
    if (it != explicit_codes.end()) return it->second;
  }
  if (popcount(A) == 1 && alpha_value) {
    if (s.flavor() == Flavor::LinearSpace) return *alpha_value;
    bool meets = false;
    for (PointSet t : s.triples()) {
      if ((t & A) != 0) {
        meets = true;
        break;
      }
    }
    if (meets && popcount(B) == 2) return *alpha_value;
  }
  if (default_rule) return delta(s, B) + default_rule->second;
  fail(Errc::UnresolvedCode,
       "mu value: no rule covers the pair " + s.format_set(A) + " over " + s.format_set(B));
}

LmuReport in_Lmu(const Structure& s, const MuFunction& mu, int max_ext) {
  LmuReport rep;
  for (const GoodPair& gp : enumerate_good_pairs_all(s, max_ext)) {
    const int c = chi(s, gp.A, gp.B);
    const int m = mu.value(s, gp.A, gp.B);
    if (c > m) {
      rep.ok = false;
      rep.violations.push_back({gp.A, gp.B, c, m});
    }
  }
  return rep;
}

bool mu_triples(const MuFunction& mu, const std::vector<GoodPair>& catalog) {
  for (const GoodPair& gp : catalog) {
    if (gp.ambient == nullptr)
      throw std::invalid_argument("mu_triples: pair lacks an ambient structure");
    const Structure& s = *gp.ambient;
    if (popcount(gp.A) <= 1) continue;
    if (delta(s, gp.B) != 2) continue;
    if (s.flavor() == Flavor::LinearSpace) {
      // Skip linear pairs: extensions lying on one line through the base.
      bool on_one_line = false;
      for (PointSet ln : lines_within(s, gp.A | gp.B)) {
        if ((gp.A & ~ln) == 0 && popcount(ln & gp.B) >= 2) {
          on_one_line = true;
          break;
        }
      }
      if (on_one_line) continue;
    }
    if (mu.value(s, gp.A, gp.B) < 3) return false;
  }
  return true;
}

bool mu_triples(const MuFunction& mu) {
  // Rule-level variant: decides the condition from the function definition
  // alone, quantifying over every possible pair type with a delta-2 base.
  // Explicit per-code entries below 3 are treated as potential delta-2
  // types (conservatively false); alpha entries are exempt because they
  // bound single-point extensions only.
  for (const auto& [code, v] : mu.explicit_codes)
    if (v < 3) return false;
  if (!mu.default_rule) return false;
  const auto [kind, offset] = *mu.default_rule;
  if (kind == MuFunction::DefaultKind::DeltaOfBase) return false;
  return 2 + offset >= 3;
}

bool connected_over_base(const Structure& s, PointSet A, PointSet B) {
  require_inside(s, A | B, "connected_over_base");
  if (popcount(A) <= 1) return true;
  // Union-find over the points of A; triples inside A u B join their
  // A-points.
  std::vector<int> pts = points_of(A);
  std::vector<int> parent(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto pos = [&](int p) {
    return static_cast<int>(std::lower_bound(pts.begin(), pts.end(), p) - pts.begin());
  };
  for (PointSet t : s.triples()) {
    if ((t & ~(A | B)) != 0) continue;
    const PointSet inA = t & A;
    if (popcount(inA) < 2) continue;
    std::vector<int> tp = points_of(inA);
    for (std::size_t i = 1; i < tp.size(); ++i) {
      const int a = find(pos(tp[0]));
      const int b = find(pos(tp[i]));
      if (a != b) parent[a] = b;
    }
  }
  const int root = find(0);
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (find(static_cast<int>(i)) != root) return false;
  return true;
}

}  // namespace smc
