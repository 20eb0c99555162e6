#include "smc/structure.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace smc {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::DuplicateTriplePoint: return "DuplicateTriplePoint";
    case Errc::LinearityViolation: return "LinearityViolation";
    case Errc::UnknownPoint: return "UnknownPoint";
    case Errc::TooManyPoints: return "TooManyPoints";
    case Errc::BadIntersection: return "BadIntersection";
    case Errc::TooManySets: return "TooManySets";
    case Errc::EmptyExtension: return "EmptyExtension";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::NotAlphaPoint: return "NotAlphaPoint";
    case Errc::Ambiguous: return "Ambiguous";
    case Errc::UnresolvedCode: return "UnresolvedCode";
    case Errc::BadGlue: return "BadGlue";
    case Errc::LineOverflow: return "LineOverflow";
    case Errc::BudgetExhausted: return "BudgetExhausted";
    case Errc::SeedNotAdmissible: return "SeedNotAdmissible";
    case Errc::NotStrongBase: return "NotStrongBase";
    case Errc::Stuck: return "Stuck";
    case Errc::IllegalSwap: return "IllegalSwap";
    case Errc::NotNormal: return "NotNormal";
    case Errc::DependentBase: return "DependentBase";
    case Errc::NoCertificate: return "NoCertificate";
    case Errc::UnknownFixture: return "UnknownFixture";
  }
  return "UnknownError";
}

const char* flavor_name(Flavor f) noexcept {
  return f == Flavor::Hypergraph ? "hypergraph" : "linear";
}

std::vector<int> points_of(PointSet s) {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(popcount(s)));
  for_each_point(s, [&](int p) { out.push_back(p); });
  return out;
}

namespace {

// Exhaustive listing of maximal relation-cliques of size >= 3 inside
// `within`: grow each triple by every point that completes a triple with
// all current pairs, then keep the inclusion-maximal results.  Exact for
// both flavors at the library's point cap.
std::vector<PointSet> maximal_cliques(const Structure& s, PointSet within) {
  std::vector<PointSet> inside;
  for (PointSet t : s.triples())
    if ((t & within) == t) inside.push_back(t);

  std::unordered_set<PointSet> seen;
  std::vector<PointSet> cliques;

  auto extendable = [&](PointSet clique, int p) {
    bool ok = true;
    for_each_point(clique, [&](int u) {
      if (!ok) return;
      for_each_point(clique & ~(point_bit(u) | (point_bit(u) - 1)), [&](int v) {
        if (!ok) return;
        if (!s.has_triple(point_bit(u) | point_bit(v) | point_bit(p))) ok = false;
      });
    });
    return ok;
  };

  std::vector<PointSet> stack(inside.begin(), inside.end());
  while (!stack.empty()) {
    PointSet c = stack.back();
    stack.pop_back();
    if (!seen.insert(c).second) continue;
    bool extended = false;
    for_each_point(within & ~c, [&](int p) {
      if (extendable(c, p)) {
        stack.push_back(c | point_bit(p));
        extended = true;
      }
    });
    if (!extended) cliques.push_back(c);
  }

  // Drop any clique strictly contained in another.
  std::sort(cliques.begin(), cliques.end());
  cliques.erase(std::unique(cliques.begin(), cliques.end()), cliques.end());
  std::vector<PointSet> out;
  for (PointSet c : cliques) {
    bool maximal = true;
    for (PointSet o : cliques)
      if (o != c && (c & o) == c) { maximal = false; break; }
    if (maximal) out.push_back(c);
  }
  return out;
}

}  // namespace

Structure::Structure(Flavor flavor, std::vector<std::string> points,
                     std::vector<std::array<int, 3>> triples,
                     std::vector<int> base)
    : flavor_(flavor), names_(std::move(points)), base_(std::move(base)) {
  if (static_cast<int>(names_.size()) > kMaxPoints)
    fail(Errc::TooManyPoints,
         "structure has " + std::to_string(names_.size()) + " points; cap is " +
             std::to_string(kMaxPoints));
  {
    std::unordered_set<std::string> uniq;
    for (const auto& nm : names_) {
      if (nm.empty()) fail(Errc::ParseError, "empty point name");
      if (!uniq.insert(nm).second)
        fail(Errc::ParseError, "duplicate point name '" + nm + "'");
    }
  }
  std::unordered_set<PointSet> seen;
  for (const auto& t : triples) {
    PointSet m = 0;
    for (int p : t) {
      if (p < 0 || p >= n())
        fail(Errc::UnknownPoint, "triple references point index " + std::to_string(p));
      m |= point_bit(p);
    }
    if (popcount(m) != 3)
      fail(Errc::DuplicateTriplePoint, "triple with a repeated point");
    if (!seen.insert(m).second) fail(Errc::ParseError, "duplicate rel line");
    triples_.push_back(m);
  }
  std::sort(triples_.begin(), triples_.end());

  {
    std::unordered_set<int> uniq;
    for (int p : base_) {
      if (p < 0 || p >= n())
        fail(Errc::UnknownPoint, "base references point index " + std::to_string(p));
      if (!uniq.insert(p).second) fail(Errc::ParseError, "repeated base point");
      base_mask_ |= point_bit(p);
    }
  }

  if (flavor_ == Flavor::LinearSpace) {
    lines_ = maximal_cliques(*this, all());
    lines_built_ = true;
    for (size_t i = 0; i < lines_.size(); ++i)
      for (size_t j = i + 1; j < lines_.size(); ++j)
        if (popcount(lines_[i] & lines_[j]) >= 2)
          fail(Errc::LinearityViolation,
               "points " + format_set(lines_[i] & lines_[j]) +
                   " lie on two distinct lines");
  }
}

int Structure::index_of(std::string_view name) const {
  for (int i = 0; i < n(); ++i)
    if (names_[static_cast<size_t>(i)] == name) return i;
  fail(Errc::UnknownPoint, "no point named '" + std::string(name) + "'");
}

const std::vector<PointSet>& Structure::full_lines() const {
  if (!lines_built_) {
    lines_ = maximal_cliques(*this, all());
    lines_built_ = true;
  }
  return lines_;
}

PointSet Structure::set_of_names(const std::vector<std::string>& names) const {
  PointSet m = 0;
  for (const auto& nm : names) m |= point_bit(index_of(nm));
  return m;
}

std::vector<std::string> Structure::names_of(PointSet s) const {
  std::vector<std::string> out;
  for_each_point(s, [&](int p) { out.push_back(name(p)); });
  std::sort(out.begin(), out.end());
  return out;
}

std::string Structure::format_set(PointSet s) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& nm : names_of(s)) {
    if (!first) os << ',';
    os << nm;
    first = false;
  }
  os << '}';
  return os.str();
}

bool Structure::has_triple(PointSet t) const {
  return std::binary_search(triples_.begin(), triples_.end(), t);
}

int Structure::degree_within(int p, PointSet within) const {
  int d = 0;
  for (PointSet t : triples_)
    if (contains(t, p) && (t & within) == t) ++d;
  return d;
}

bool Structure::operator==(const Structure& other) const {
  return flavor_ == other.flavor_ && names_ == other.names_ &&
         triples_ == other.triples_ && base_ == other.base_;
}

namespace {

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Structure parse(const std::string& text) {
  bool have_flavor = false;
  Flavor flavor = Flavor::Hypergraph;
  std::vector<std::string> points;
  bool have_points = false;
  std::vector<std::array<int, 3>> triples;
  std::vector<int> base;
  std::unordered_map<std::string, int> index;

  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    auto toks_all = tokenize(line);
    if (toks_all.empty()) continue;
    auto at = [&](const std::string& msg) {
      return msg + " (line " + std::to_string(lineno) + ")";
    };

    std::string key = toks_all.front();
    if (key.empty() || key.back() != ':') {
      // allow "key: rest" written as "key:rest"
      auto pos = key.find(':');
      if (pos == std::string::npos)
        fail(Errc::ParseError, at("expected 'key:' prefix, got '" + key + "'"));
      toks_all.insert(toks_all.begin() + 1, key.substr(pos + 1));
      key = key.substr(0, pos + 1);
      if (toks_all[1].empty()) toks_all.erase(toks_all.begin() + 1);
    }
    key.pop_back();
    std::vector<std::string> toks(toks_all.begin() + 1, toks_all.end());

    auto lookup = [&](const std::string& nm) {
      auto it = index.find(nm);
      if (it == index.end())
        fail(Errc::UnknownPoint, at("undeclared point '" + nm + "'"));
      return it->second;
    };

    if (key == "flavor") {
      if (toks.size() != 1) fail(Errc::ParseError, at("flavor takes one token"));
      if (toks[0] == "hypergraph") flavor = Flavor::Hypergraph;
      else if (toks[0] == "linear") flavor = Flavor::LinearSpace;
      else fail(Errc::ParseError, at("unknown flavor '" + toks[0] + "'"));
      have_flavor = true;
    } else if (key == "points") {
      if (have_points) fail(Errc::ParseError, at("repeated points line"));
      points = toks;
      for (int i = 0; i < static_cast<int>(points.size()); ++i) {
        if (!index.emplace(points[static_cast<size_t>(i)], i).second)
          fail(Errc::ParseError, at("duplicate point name '" +
                                    points[static_cast<size_t>(i)] + "'"));
      }
      have_points = true;
    } else if (key == "rel") {
      if (toks.size() != 3) fail(Errc::ParseError, at("rel takes three points"));
      std::array<int, 3> t{};
      for (int i = 0; i < 3; ++i) t[static_cast<size_t>(i)] = lookup(toks[static_cast<size_t>(i)]);
      if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
        fail(Errc::DuplicateTriplePoint, at("rel with a repeated point"));
      triples.push_back(t);
    } else if (key == "base") {
      if (!base.empty()) fail(Errc::ParseError, at("repeated base line"));
      for (const auto& nm : toks) base.push_back(lookup(nm));
    } else {
      fail(Errc::ParseError, at("unknown key '" + key + "'"));
    }
  }
  if (!have_flavor) fail(Errc::ParseError, "missing flavor line");
  if (!have_points) fail(Errc::ParseError, "missing points line");
  return Structure(flavor, std::move(points), std::move(triples), std::move(base));
}

std::string serialize(const Structure& s) {
  std::ostringstream os;
  os << "flavor: " << flavor_name(s.flavor()) << '\n';
  os << "points:";
  for (const auto& nm : s.names()) os << ' ' << nm;
  os << '\n';
  for (PointSet t : s.triples()) {
    os << "rel:";
    for_each_point(t, [&](int p) { os << ' ' << s.name(p); });
    os << '\n';
  }
  if (!s.base().empty()) {
    os << "base:";
    for (int p : s.base()) os << ' ' << s.name(p);
    os << '\n';
  }
  return os.str();
}

Structure induced(const Structure& s, PointSet mask, std::vector<int>* remap_out) {
  std::vector<int> remap(static_cast<size_t>(s.n()), -1);
  std::vector<std::string> names;
  for_each_point(mask, [&](int p) {
    remap[static_cast<size_t>(p)] = static_cast<int>(names.size());
    names.push_back(s.name(p));
  });
  std::vector<std::array<int, 3>> triples;
  for (PointSet t : s.triples()) {
    if ((t & mask) != t) continue;
    std::array<int, 3> nt{};
    int i = 0;
    for_each_point(t, [&](int p) { nt[static_cast<size_t>(i++)] = remap[static_cast<size_t>(p)]; });
    triples.push_back(nt);
  }
  std::vector<int> base;
  for (int p : s.base())
    if (contains(mask, p)) base.push_back(remap[static_cast<size_t>(p)]);
  if (remap_out) *remap_out = std::move(remap);
  return Structure(s.flavor(), std::move(names), std::move(triples), std::move(base));
}

std::vector<PointSet> lines_within(const Structure& s, PointSet within) {
  return maximal_cliques(s, within);
}

}  // namespace smc
