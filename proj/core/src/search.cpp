#include "smc/search.hpp"

#include <algorithm>
#include <stdexcept>

namespace smc {

namespace {

struct SearchContext {
  const Structure& src;
  const Structure& dst;
  bool same;                                   // src and dst are one object
  std::vector<std::vector<PointSet>> src_tri;  // triples containing each src point
  std::vector<int> dst_degree;                 // triple count per dst point
  std::vector<int> candidates_fixed;           // fixed image per src point, or -1
  std::vector<PointSet> candidate_sets;        // allowed dst set per src point
  std::vector<int> order;                      // assignment order of src points
};

// Assignment order: fixed points first (ascending), then greedily the point
// completing the most triples with already-ordered points; ties broken by
// higher degree, then lower index.
std::vector<int> make_order(const Structure& src,
                            const std::vector<std::vector<PointSet>>& src_tri,
                            const std::vector<int>& fixed_img) {
  int ns = src.n();
  std::vector<int> order;
  std::vector<bool> placed(static_cast<size_t>(ns), false);
  for (int p = 0; p < ns; ++p)
    if (fixed_img[static_cast<size_t>(p)] >= 0) {
      order.push_back(p);
      placed[static_cast<size_t>(p)] = true;
    }
  while (static_cast<int>(order.size()) < ns) {
    int best = -1;
    long best_link = -1, best_deg = -1;
    for (int p = 0; p < ns; ++p) {
      if (placed[static_cast<size_t>(p)]) continue;
      long link = 0;
      for (PointSet t : src_tri[static_cast<size_t>(p)]) {
        int placed_members = 0;
        for_each_point(t & ~point_bit(p), [&](int u) {
          if (placed[static_cast<size_t>(u)]) ++placed_members;
        });
        if (placed_members == 2) ++link;
      }
      long deg = static_cast<long>(src_tri[static_cast<size_t>(p)].size());
      if (best < 0 || link > best_link ||
          (link == best_link && (deg > best_deg || (deg == best_deg && p < best)))) {
        best = p;
        best_link = link;
        best_deg = deg;
      }
    }
    order.push_back(best);
    placed[static_cast<size_t>(best)] = true;
  }
  return order;
}

class Backtracker {
 public:
  Backtracker(const SearchContext& ctx) : ctx_(ctx) {
    img_.assign(static_cast<size_t>(ctx.src.n()), -1);
    used_.assign(static_cast<size_t>(ctx.dst.n()), false);
  }

  void run(std::vector<Embedding>& out) {
    out_ = &out;
    rec(0);
  }

 private:
  bool degree_ok(int p, int q) const {
    int sd = static_cast<int>(ctx_.src_tri[static_cast<size_t>(p)].size());
    int dd = ctx_.dst_degree[static_cast<size_t>(q)];
    return ctx_.same ? sd == dd : sd <= dd;
  }

  // Relation preservation both ways over the already-placed points.
  bool consistent(int p, int q, int pos) const {
    for (PointSet t : ctx_.src_tri[static_cast<size_t>(p)]) {
      PointSet others = t & ~point_bit(p);
      bool all_placed = true;
      PointSet image = point_bit(q);
      for_each_point(others, [&](int u) {
        int iu = img_[static_cast<size_t>(u)];
        if (iu < 0) all_placed = false;
        else image |= point_bit(iu);
      });
      if (all_placed && !ctx_.dst.has_triple(image)) return false;
    }
    for (int i = 0; i < pos; ++i) {
      int u1 = ctx_.order[static_cast<size_t>(i)];
      for (int j = i + 1; j < pos; ++j) {
        int u2 = ctx_.order[static_cast<size_t>(j)];
        PointSet image = point_bit(q) | point_bit(img_[static_cast<size_t>(u1)]) |
                         point_bit(img_[static_cast<size_t>(u2)]);
        if (popcount(image) != 3) continue;
        if (ctx_.dst.has_triple(image)) {
          PointSet source = point_bit(p) | point_bit(u1) | point_bit(u2);
          if (!ctx_.src.has_triple(source)) return false;
        }
      }
    }
    return true;
  }

  void rec(int pos) {
    if (pos == ctx_.src.n()) {
      out_->push_back(Embedding{&ctx_.src, &ctx_.dst, img_});
      return;
    }
    int p = ctx_.order[static_cast<size_t>(pos)];
    PointSet allowed = ctx_.candidate_sets[static_cast<size_t>(p)];
    for_each_point(allowed, [&](int q) {
      if (used_[static_cast<size_t>(q)]) return;
      if (!degree_ok(p, q)) return;
      if (!consistent(p, q, pos)) return;
      img_[static_cast<size_t>(p)] = q;
      used_[static_cast<size_t>(q)] = true;
      rec(pos + 1);
      used_[static_cast<size_t>(q)] = false;
      img_[static_cast<size_t>(p)] = -1;
    });
  }

  const SearchContext& ctx_;
  std::vector<int> img_;
  std::vector<bool> used_;
  std::vector<Embedding>* out_ = nullptr;
};

}  // namespace

std::vector<Embedding> embeddings(
    const Structure& src, const Structure& dst,
    const std::vector<std::pair<int, int>>& fixed,
    const std::vector<std::pair<PointSet, PointSet>>& setwise) {
  int ns = src.n(), nd = dst.n();
  std::vector<int> fixed_img(static_cast<size_t>(ns), -1);
  for (auto [p, q] : fixed) {
    if (p < 0 || p >= ns) fail(Errc::UnknownPoint, "fixed map source out of range");
    if (q < 0 || q >= nd) fail(Errc::UnknownPoint, "fixed map target out of range");
    if (fixed_img[static_cast<size_t>(p)] >= 0 && fixed_img[static_cast<size_t>(p)] != q)
      throw std::invalid_argument("fixed map assigns one source point twice");
    fixed_img[static_cast<size_t>(p)] = q;
  }
  // Injectivity of the fixed part.
  {
    std::vector<bool> hit(static_cast<size_t>(nd), false);
    for (int p = 0; p < ns; ++p) {
      int q = fixed_img[static_cast<size_t>(p)];
      if (q < 0) continue;
      if (hit[static_cast<size_t>(q)])
        throw std::invalid_argument("fixed map is not injective");
      hit[static_cast<size_t>(q)] = true;
    }
  }

  SearchContext ctx{src, dst, &src == &dst, {}, {}, {}, {}, {}};
  ctx.src_tri.resize(static_cast<size_t>(ns));
  for (PointSet t : src.triples())
    for_each_point(t, [&](int p) { ctx.src_tri[static_cast<size_t>(p)].push_back(t); });
  ctx.dst_degree.resize(static_cast<size_t>(nd), 0);
  for (PointSet t : dst.triples())
    for_each_point(t, [&](int q) { ++ctx.dst_degree[static_cast<size_t>(q)]; });

  ctx.candidate_sets.assign(static_cast<size_t>(ns), dst.all());
  for (auto [sset, dset] : setwise)
    for_each_point(sset, [&](int p) {
      if (p < ns) ctx.candidate_sets[static_cast<size_t>(p)] &= dset;
    });
  for (int p = 0; p < ns; ++p)
    if (fixed_img[static_cast<size_t>(p)] >= 0)
      ctx.candidate_sets[static_cast<size_t>(p)] = point_bit(fixed_img[static_cast<size_t>(p)]);
  ctx.candidates_fixed = fixed_img;
  ctx.order = make_order(src, ctx.src_tri, fixed_img);

  std::vector<Embedding> out;
  Backtracker(ctx).run(out);
  std::sort(out.begin(), out.end(),
            [](const Embedding& a, const Embedding& b) { return a.map < b.map; });
  return out;
}

std::vector<Perm> automorphisms(const Structure& s, PointSet pointwise,
                                const std::vector<PointSet>& setwise) {
  std::vector<std::pair<int, int>> fixed;
  for_each_point(pointwise, [&](int p) { fixed.emplace_back(p, p); });
  std::vector<std::pair<PointSet, PointSet>> sw;
  for (PointSet set : setwise) sw.emplace_back(set, set);
  std::vector<Perm> out;
  for (auto& e : embeddings(s, s, fixed, sw)) out.push_back(std::move(e.map));
  return out;
}

std::vector<Perm> automorphisms(const Structure& s, PointSet pointwise,
                                PointSet setwise) {
  std::vector<PointSet> sw;
  if (setwise != 0) sw.push_back(setwise);
  return automorphisms(s, pointwise, sw);
}

std::vector<PointSet> orbits(const Structure& s, const std::vector<Perm>& perms) {
  int n = s.n();
  std::vector<int> parent(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
  auto find = [&](int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  };
  for (const Perm& g : perms)
    for (int p = 0; p < n; ++p) {
      int ra = find(p), rb = find(g[static_cast<size_t>(p)]);
      if (ra != rb) parent[static_cast<size_t>(ra)] = rb;
    }
  std::vector<PointSet> classes(static_cast<size_t>(n), 0);
  for (int p = 0; p < n; ++p) classes[static_cast<size_t>(find(p))] |= point_bit(p);
  std::vector<PointSet> out;
  for (PointSet c : classes)
    if (c != 0) out.push_back(c);
  std::sort(out.begin(), out.end(),
            [](PointSet a, PointSet b) { return first_point(a) < first_point(b); });
  return out;
}

PointSet fixed_points(const Structure& s, const std::vector<Perm>& perms) {
  PointSet out = s.all();
  for (const Perm& g : perms) {
    PointSet keep = 0;
    for (int p = 0; p < s.n(); ++p)
      if (g[static_cast<size_t>(p)] == p) keep |= point_bit(p);
    out &= keep;
  }
  return out;
}

namespace {

// Byte layout of a code under a relabeling (new label -> original point):
//   [flavor][n][triple count][marked count]
//   [per triple, sorted by (max,mid,min) of new labels: min, mid, max bytes]
//   [per new label: marked-membership bitmask byte]
//
// Sorting triples by their maximum new label first makes the encoded triple
// list grow append-only as labels are assigned, so during the minimization
// search every known byte sits at its final position and prefix pruning is
// sound.  Membership bytes live after the whole triple section and are only
// compared on complete relabelings.
struct CanonSearch {
  const Structure& s;
  const std::vector<PointSet>& marked;
  int n;
  std::string best;            // full code of the best complete relabeling
  bool have_best = false;
  std::vector<int> chosen;     // new label -> original point
  std::vector<bool> used;      // original point chosen already
  std::string header;

  explicit CanonSearch(const Structure& s_in, const std::vector<PointSet>& marked_in)
      : s(s_in), marked(marked_in), n(s_in.n()) {
    used.assign(static_cast<size_t>(n), false);
    header.push_back(static_cast<char>(s.flavor() == Flavor::Hypergraph ? 0 : 1));
    header.push_back(static_cast<char>(n));
    header.push_back(static_cast<char>(s.triples().size()));
    header.push_back(static_cast<char>(marked.size()));
  }

  char membership_byte(int original) const {
    unsigned b = 0;
    for (size_t i = 0; i < marked.size(); ++i)
      if (contains(marked[i], original)) b |= 1u << i;
    return static_cast<char>(b);
  }

  // Encoded triples fully inside the first `depth` labels, appended in
  // (max,mid,min) order of new labels.
  void triple_bytes(int depth, std::string& out) const {
    std::vector<std::array<int, 3>> relabeled;
    PointSet prefix = 0;
    std::vector<int> new_label(static_cast<size_t>(n), -1);
    for (int i = 0; i < depth; ++i) {
      prefix |= point_bit(chosen[static_cast<size_t>(i)]);
      new_label[static_cast<size_t>(chosen[static_cast<size_t>(i)])] = i;
    }
    for (PointSet t : s.triples()) {
      if ((t & prefix) != t) continue;
      std::array<int, 3> lab{};
      int k = 0;
      for_each_point(t, [&](int p) { lab[static_cast<size_t>(k++)] = new_label[static_cast<size_t>(p)]; });
      std::sort(lab.begin(), lab.end());
      relabeled.push_back(lab);
    }
    std::sort(relabeled.begin(), relabeled.end(),
              [](const std::array<int, 3>& a, const std::array<int, 3>& b) {
                return std::array<int, 3>{a[2], a[1], a[0]} <
                       std::array<int, 3>{b[2], b[1], b[0]};
              });
    for (const auto& lab : relabeled) {
      out.push_back(static_cast<char>(lab[0]));
      out.push_back(static_cast<char>(lab[1]));
      out.push_back(static_cast<char>(lab[2]));
    }
  }

  // Compare the candidate's known final-position bytes at `depth` against
  // best: the triple-section prefix is determined (append-only growth), the
  // rest is not.  <0 promising, 0 tied so far, >0 prunable.
  int compare_prefix(int depth) const {
    if (!have_best) return -1;
    std::string tb;
    triple_bytes(depth, tb);
    size_t off = header.size();
    for (size_t i = 0; i < tb.size(); ++i) {
      char c = tb[i];
      char b = best[off + i];
      if (c != b) return c < b ? -1 : 1;
    }
    return 0;
  }

  void complete() {
    std::string code = header;
    triple_bytes(n, code);
    for (int i = 0; i < n; ++i)
      code.push_back(membership_byte(chosen[static_cast<size_t>(i)]));
    if (!have_best || code < best) {
      best = std::move(code);
      have_best = true;
    }
  }

  void rec(int depth) {
    if (depth == n) {
      complete();
      return;
    }
    for (int p = 0; p < n; ++p) {
      if (used[static_cast<size_t>(p)]) continue;
      chosen.push_back(p);
      used[static_cast<size_t>(p)] = true;
      if (compare_prefix(depth + 1) <= 0) rec(depth + 1);
      used[static_cast<size_t>(p)] = false;
      chosen.pop_back();
    }
  }
};

}  // namespace

CanonCode canon(const Structure& s, const std::vector<PointSet>& marked) {
  if (s.n() > kMaxCanonPoints)
    fail(Errc::TooManyPoints, "canonical codes support at most " +
                                  std::to_string(kMaxCanonPoints) + " points");
  if (marked.size() > 8)
    throw std::invalid_argument("canon supports at most 8 marked sets");
  CanonSearch search(s, marked);
  search.rec(0);
  return CanonCode{std::move(search.best)};
}

std::string to_hex(const CanonCode& code) {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(code.bytes.size() * 2);
  for (unsigned char c : code.bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xF]);
  }
  return out;
}

CanonCode from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) fail(Errc::ParseError, "odd-length hex code");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    fail(Errc::ParseError, std::string("bad hex digit '") + c + "'");
  };
  std::string bytes;
  bytes.reserve(hex.size() / 2);
  for (size_t i = 0; i < hex.size(); i += 2)
    bytes.push_back(static_cast<char>((nibble(hex[i]) << 4) | nibble(hex[i + 1])));
  return CanonCode{std::move(bytes)};
}

}  // namespace smc
