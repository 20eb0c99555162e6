#include "smc/fixtures.hpp"
#include <algorithm>
#include "smc/error.hpp"
namespace smc {
namespace {
const char* const k_examp1_struct =
    R"RAW(# Two independent points, two parallel one-point 0-extensions, and a
# two-point second-level extension attached to both of them.
flavor: hypergraph
points: a1 a2 b1 b2 c1 c2
rel: a1 a2 b1
rel: a1 a2 b2
rel: c1 c2 b1
rel: c1 c2 b2
base: a1 a2
)RAW";
const char* const k_examp1_mu =
    R"RAW(alpha: 2
default: delta
)RAW";
const char* const k_examp2_struct =
    R"RAW(# Two independent points with two isomorphic three-point petals, plus a
# six-point second-level petal attached to the petals' middle points.
flavor: hypergraph
points: a1 a2 c1 c2 c3 d1 d2 d3 alpha1 alpha2 gamma1 gamma3 delta1 delta3
# first petal
rel: a1 c1 c3
rel: a2 c1 c2
rel: a2 c2 c3
# second petal
rel: a1 d1 d3
rel: a2 d1 d2
rel: a2 d2 d3
# second-level petal over {c2, d2}
rel: alpha1 gamma1 gamma3
rel: alpha2 gamma1 c2
rel: alpha2 c2 gamma3
rel: alpha1 delta1 delta3
rel: alpha2 delta1 d2
rel: alpha2 d2 delta3
base: a1 a2
)RAW";
const char* const k_examp2_mu =
    R"RAW(alpha: 2
default: delta
)RAW";
const char* const k_examp2_sym_struct =
    R"RAW(# Symmetrized closure: the 14-point structure together with the mirror
# images of all petals under the swap of the two base points.
flavor: hypergraph
points: a1 a2 c1 c2 c3 d1 d2 d3 alpha1 alpha2 gamma1 gamma3 delta1 delta3 c1p c2p c3p d1p d2p d3p alpha1p alpha2p gamma1p gamma3p delta1p delta3p
# original petals
rel: a1 c1 c3
rel: a2 c1 c2
rel: a2 c2 c3
rel: a1 d1 d3
rel: a2 d1 d2
rel: a2 d2 d3
# original second-level petal over {c2, d2}
rel: alpha1 gamma1 gamma3
rel: alpha2 gamma1 c2
rel: alpha2 c2 gamma3
rel: alpha1 delta1 delta3
rel: alpha2 delta1 d2
rel: alpha2 d2 delta3
# mirrored petals (base points swapped)
rel: a2 c1p c3p
rel: a1 c1p c2p
rel: a1 c2p c3p
rel: a2 d1p d3p
rel: a1 d1p d2p
rel: a1 d2p d3p
# mirrored second-level petal over {c2p, d2p}
rel: alpha1p gamma1p gamma3p
rel: alpha2p gamma1p c2p
rel: alpha2p c2p gamma3p
rel: alpha1p delta1p delta3p
rel: alpha2p delta1p d2p
rel: alpha2p d2p delta3p
base: a1 a2
)RAW";
const char* const k_examp2_sym_mu =
    R"RAW(alpha: 2
default: delta
)RAW";
const char* const k_steiner_ce_struct =
    R"RAW(# Steiner counterexample seed: two independent points, two isomorphic
# five-point blocks (each a small linear space with one length-4 line),
# and a ten-point second-level block attached at the two length-4 lines'
# middle points.  Length-4 lines are written as all four of their triples.
flavor: linear
points: a1 a2 d1 d2 d3 d4 d5 c1 c2 c3 c4 c5 alpha1 alpha2 delta1 delta2 delta4 delta5 gamma1 gamma2 gamma4 gamma5
# d-block: lines {a1,d2,d1} {a1,d4,d5} {a2,d5,d3,d1} {d2,d3,d4}
rel: a1 d2 d1
rel: a1 d4 d5
rel: a2 d5 d3
rel: a2 d5 d1
rel: a2 d3 d1
rel: d5 d3 d1
rel: d2 d3 d4
# c-block: lines {a1,c2,c1} {a1,c4,c5} {a2,c5,c3,c1} {c2,c3,c4}
rel: a1 c2 c1
rel: a1 c4 c5
rel: a2 c5 c3
rel: a2 c5 c1
rel: a2 c3 c1
rel: c5 c3 c1
rel: c2 c3 c4
# second-level block over {d3, c3}: image of the two blocks' union
# under a1->alpha1, a2->alpha2, di->deltai, ci->gammai (d3, c3 fixed)
rel: alpha1 delta2 delta1
rel: alpha1 delta4 delta5
rel: alpha2 delta5 d3
rel: alpha2 delta5 delta1
rel: alpha2 d3 delta1
rel: delta5 d3 delta1
rel: delta2 d3 delta4
rel: alpha1 gamma2 gamma1
rel: alpha1 gamma4 gamma5
rel: alpha2 gamma5 c3
rel: alpha2 gamma5 gamma1
rel: alpha2 c3 gamma1
rel: gamma5 c3 gamma1
rel: gamma2 c3 gamma4
base: a1 a2
)RAW";
const char* const k_steiner_ce_mu =
    R"RAW(alpha: 2
default: delta
)RAW";
const char* const k_overlap_flowers_struct =
    R"RAW(# One three-point extension over a three-point base, plus three pairs of
# copies where the two copies of each pair share exactly one point.
flavor: hypergraph
points: b1 b2 b3 x y z x0 y0 z0 xp0 yp0 x1 y1 z1 xp1 yp1 x2 y2 z2 xp2 yp2
rel: b1 x y
rel: b2 y z
rel: b3 z x
rel: b1 x0 y0
rel: b2 y0 z0
rel: b3 z0 x0
rel: b1 xp0 yp0
rel: b2 yp0 z0
rel: b3 z0 xp0
rel: b1 x1 y1
rel: b2 y1 z1
rel: b3 z1 x1
rel: b1 xp1 yp1
rel: b2 yp1 z1
rel: b3 z1 xp1
rel: b1 x2 y2
rel: b2 y2 z2
rel: b3 z2 x2
rel: b1 xp2 yp2
rel: b2 yp2 z2
rel: b3 z2 xp2
base: b1 b2 b3
)RAW";
const char* const k_overlap_flowers_mu =
    R"RAW(alpha: 3
default: delta+1
)RAW";
const char* const k_overlap_flowers_2_struct =
    R"RAW(# Two isomorphic three-point extensions over a two-point base, plus their
# mirror images under the swap of the base points: two flowers, one bouquet.
flavor: hypergraph
points: b1 b2 c11 c12 c13 c21 c22 c23 d11 d12 d13 d21 d22 d23
rel: b1 c11 c12
rel: b2 c12 c13
rel: b2 c13 c11
rel: b1 c21 c22
rel: b2 c22 c23
rel: b2 c23 c21
rel: b2 d11 d12
rel: b1 d12 d13
rel: b1 d13 d11
rel: b2 d21 d22
rel: b1 d22 d23
rel: b1 d23 d21
base: b1 b2
)RAW";
const char* const k_overlap_flowers_2_mu =
    R"RAW(alpha: 2
default: delta
)RAW";
const char* const k_k4_design_struct =
    R"RAW(# Four points, all four triples: the smallest 0-dimensional block.
flavor: hypergraph
points: w x y z
rel: w x y
rel: w x z
rel: w y z
rel: x y z
)RAW";
const char* const k_k4_design_mu =
    R"RAW(alpha: 3
default: delta+1
)RAW";
const char* const k_alpha_line_3_struct =
    R"RAW(# A full line of length 3 through two independent points.
flavor: linear
points: a1 a2 x1
rel: a1 a2 x1
base: a1 a2
)RAW";
const char* const k_alpha_line_3_mu =
    R"RAW(alpha: 1
default: delta
)RAW";
const char* const k_alpha_line_4_struct =
    R"RAW(# A full line of length 4 through two independent points.
flavor: linear
points: a1 a2 x1 x2
rel: a1 a2 x1
rel: a1 a2 x2
rel: a1 x1 x2
rel: a2 x1 x2
base: a1 a2
)RAW";
const char* const k_alpha_line_4_mu =
    R"RAW(alpha: 2
default: delta
)RAW";
const char* const k_alpha_line_5_struct =
    R"RAW(# A full line of length 5 through two independent points.
flavor: linear
points: a1 a2 x1 x2 x3
rel: a1 a2 x1
rel: a1 a2 x2
rel: a1 a2 x3
rel: a1 x1 x2
rel: a1 x1 x3
rel: a1 x2 x3
rel: a2 x1 x2
rel: a2 x1 x3
rel: a2 x2 x3
rel: x1 x2 x3
base: a1 a2
)RAW";
const char* const k_alpha_line_5_mu =
    R"RAW(alpha: 3
default: delta
)RAW";
}  // namespace
const std::vector<FixtureInfo>& fixture_registry() {
  static const std::vector<FixtureInfo> reg = {
      {"examp1", k_examp1_struct, k_examp1_mu, true, true},
      {"examp2", k_examp2_struct, k_examp2_mu, true, false},
      {"examp2-sym", k_examp2_sym_struct, k_examp2_sym_mu, true, true},
      {"steiner-ce", k_steiner_ce_struct, k_steiner_ce_mu, true, false},
      {"overlap-flowers", k_overlap_flowers_struct, k_overlap_flowers_mu, true, true},
      {"overlap-flowers-2", k_overlap_flowers_2_struct, k_overlap_flowers_2_mu, true, true},
      {"k4-design", k_k4_design_struct, k_k4_design_mu, true, true},
      {"alpha-line-3", k_alpha_line_3_struct, k_alpha_line_3_mu, true, true},
      {"alpha-line-4", k_alpha_line_4_struct, k_alpha_line_4_mu, true, true},
      {"alpha-line-5", k_alpha_line_5_struct, k_alpha_line_5_mu, true, true},
  };
  return reg;
}

const FixtureInfo& fixture_info(const std::string& name) {
  for (const FixtureInfo& f : fixture_registry())
    if (name == f.name) return f;
  fail(Errc::UnknownFixture, "no fixture named '" + name + "' is registered");
}

bool is_fixture(const std::string& name) {
  for (const FixtureInfo& f : fixture_registry())
    if (name == f.name) return true;
  return false;
}

Structure fixture_structure(const std::string& name) {
  return parse(fixture_info(name).struct_text);
}

MuFunction fixture_mu(const std::string& name) {
  const FixtureInfo& f = fixture_info(name);
  if (f.mu_text == nullptr)
    fail(Errc::UnknownFixture, "fixture '" + name + "' has no bound function");
  return MuFunction::parse(f.mu_text);
}

NormalityCertificate fixture_certificate(const std::string& name) {
  const FixtureInfo& f = fixture_info(name);
  NormalityCertificate cert;
  cert.pointwise = f.certified_pointwise;
  cert.setwise = f.certified_setwise;
  return cert;
}

}  // namespace smc
