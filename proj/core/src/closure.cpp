#include "smc/closure.hpp"

#include <stdexcept>

#include "smc/predim.hpp"

namespace smc {

namespace {

constexpr int kMaxDimPoints = 26;

void require_query(const Structure& s, PointSet A) {
  if ((A & ~s.all()) != 0)
    fail(Errc::UnknownPoint, "query uses point bits outside the structure");
  if (s.n() > kMaxDimPoints)
    fail(Errc::TooManyPoints,
         "dimension queries support at most " + std::to_string(kMaxDimPoints) +
             " points, structure has " + std::to_string(s.n()));
}

}  // namespace

DimOracle::DimOracle(const Structure& s) : s_(&s) {}

void DimOracle::ensure_table() const {
  if (table_built_ || s_->flavor() != Flavor::Hypergraph) return;
  // The per-subset counts are bytes; beyond 120 triples fall back to direct
  // per-query triple scans rather than risk overflow.
  if (s_->triples().size() > 120) return;
  size_t size = size_t{1} << s_->n();
  triple_count_.assign(size, 0);
  for (PointSet t : s_->triples()) triple_count_[t] = static_cast<std::int8_t>(triple_count_[t] + 1);
  // Subset-sum sweep: after pass i, triple_count_[S] counts the triples
  // contained in S over the first i+1 bit positions.
  for (int i = 0; i < s_->n(); ++i) {
    size_t bit = size_t{1} << i;
    for (size_t block = 0; block < size; block += bit << 1)
      for (size_t off = 0; off < bit; ++off)
        triple_count_[block + bit + off] = static_cast<std::int8_t>(
            triple_count_[block + bit + off] + triple_count_[block + off]);
  }
  table_built_ = true;
}

int DimOracle::delta_of(PointSet Y) const {
  if (s_->flavor() == Flavor::Hypergraph) {
    if (table_built_) return popcount(Y) - triple_count_[Y];
    int inside = 0;
    for (PointSet t : s_->triples())
      if ((t & Y) == t) ++inside;
    return popcount(Y) - inside;
  }
  int weight = 0;
  for (PointSet ln : s_->full_lines()) {
    int k = popcount(ln & Y);
    if (k >= 3) weight += k - 2;
  }
  return popcount(Y) - weight;
}

int DimOracle::dim(PointSet A) const {
  require_query(*s_, A);
  ensure_table();
  PointSet comp = s_->all() & ~A;
  int best = delta_of(A);
  PointSet sub = comp;
  while (sub != 0) {
    int d = delta_of(A | sub);
    if (d < best) best = d;
    sub = (sub - 1) & comp;
  }
  return best;
}

PointSet DimOracle::icl_set(PointSet A) const {
  require_query(*s_, A);
  ensure_table();
  PointSet comp = s_->all() & ~A;
  // First pass: the minimum; second pass: intersect all achievers.
  int best = delta_of(A);
  PointSet sub = comp;
  while (sub != 0) {
    int d = delta_of(A | sub);
    if (d < best) best = d;
    sub = (sub - 1) & comp;
  }
  PointSet inter = s_->all();
  sub = comp;
  while (true) {
    if (delta_of(A | sub) == best) inter &= (A | sub);
    if (sub == 0) break;
    sub = (sub - 1) & comp;
  }
  if (delta_of(inter) != best)
    throw std::logic_error(
        "intersection of minimum-delta supersets fails to achieve the minimum");
  return inter;
}

PointSet DimOracle::acl_trace(PointSet X) const {
  require_query(*s_, X);
  ensure_table();
  int base = dim(X);
  // One sweep over the supersets of X, tracking for every outside point the
  // least delta over supersets containing it.
  std::vector<int> best(static_cast<size_t>(s_->n()), kMaxPoints + 1);
  PointSet comp = s_->all() & ~X;
  PointSet sub = comp;
  while (true) {
    int d = delta_of(X | sub);
    for_each_point(sub, [&](int p) {
      if (d < best[static_cast<size_t>(p)]) best[static_cast<size_t>(p)] = d;
    });
    if (sub == 0) break;
    sub = (sub - 1) & comp;
  }
  PointSet out = X;
  for_each_point(comp, [&](int p) {
    if (best[static_cast<size_t>(p)] <= base) out |= point_bit(p);
  });
  return out;
}

bool DimOracle::is_strong(PointSet A) const {
  require_query(*s_, A);
  ensure_table();
  return delta_of(A) == dim(A);
}

bool is_strong(const Structure& s, PointSet A) { return DimOracle(s).is_strong(A); }

ClosureResult icl(const Structure& s, PointSet A) {
  DimOracle oracle(s);
  ClosureResult res;
  res.input = A;
  res.closure = oracle.icl_set(A);
  res.chain.emplace_back(A, delta(s, A));
  if (res.closure != A) res.chain.emplace_back(res.closure, delta(s, res.closure));
  return res;
}

bool is_dclosed(const Structure& s, PointSet X) {
  DimOracle oracle(s);
  int base = oracle.dim(X);
  bool closed = true;
  for_each_point(s.all() & ~X, [&](int p) {
    if (closed && oracle.dim(X | point_bit(p)) == base) closed = false;
  });
  return closed;
}

PointSet acl_trace(const Structure& s, PointSet X) {
  return DimOracle(s).acl_trace(X);
}

}  // namespace smc
