// smc: command-line front end for the finite-structure toolkit.
//
// Verbs cover predimension and closure queries, good-pair enumeration,
// bound checking, free amalgamation, bounded generic building, chain and
// tree decomposition, flowers, orbit/definability reports, the quasigroup
// experiment, fixture verification, and the property self-test.
//
// Exit codes: 0 success (or query answered), 1 assertion/semantic failure,
// 2 usage or parse error.  Reports go to standard output, diagnostics to
// standard error.  Output is plain text (NO_COLOR is honored trivially:
// nothing is ever colorized) and byte-deterministic for fixed inputs.

#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "smc/amalgam.hpp"
#include "smc/closure.hpp"
#include "smc/decomp.hpp"
#include "smc/definability.hpp"
#include "smc/error.hpp"
#include "smc/fixtures.hpp"
#include "smc/pairs.hpp"
#include "smc/predim.hpp"
#include "smc/search.hpp"
#include "smc/selftest.hpp"
#include "smc/structure.hpp"

namespace {

using nlohmann::json;
using namespace smc;

// Thrown for command-line level problems that CLI11 cannot see (bad file,
// malformed set syntax); mapped to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A structure argument is a registered fixture name, a path to a structure
// file, or a fixture name with a ".struct" suffix.
struct ResolvedInput {
  Structure s;
  bool from_registry = false;
  std::string fixture_name;
};

ResolvedInput resolve_structure(const std::string& arg) {
  if (is_fixture(arg))
    return {fixture_structure(arg), true, arg};
  if (std::ifstream probe(arg); probe.good())
    return {parse(read_file(arg)), false, ""};
  if (arg.size() > 7 && arg.substr(arg.size() - 7) == ".struct") {
    const std::string stem = arg.substr(0, arg.size() - 7);
    if (is_fixture(stem)) return {fixture_structure(stem), true, stem};
  }
  throw UsageError("no fixture or readable file named '" + arg + "'");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

PointSet parse_set(const Structure& s, const std::string& csv) {
  if (csv.empty()) return 0;
  PointSet out = 0;
  for (const std::string& name : split(csv, ','))
    out |= point_bit(s.index_of(name));
  return out;
}

// The bound function for a command: an explicit --mu file wins; a fixture
// input falls back to its bundled bound function.
std::optional<MuFunction> resolve_mu(const ResolvedInput& in,
                                     const std::string& mu_path) {
  if (!mu_path.empty()) return MuFunction::parse(read_file(mu_path));
  if (in.from_registry && fixture_info(in.fixture_name).mu_text != nullptr)
    return fixture_mu(in.fixture_name);
  return std::nullopt;
}

NormalityCertificate resolve_certificate(const ResolvedInput& in,
                                         bool assume_normal) {
  if (in.from_registry) return fixture_certificate(in.fixture_name);
  NormalityCertificate cert;
  cert.assumed = assume_normal;
  return cert;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------
// verb implementations (return the process exit code)

int cmd_delta(const ResolvedInput& in, const std::string& set_csv) {
  const PointSet A = set_csv.empty() ? in.s.all() : parse_set(in.s, set_csv);
  std::cout << delta(in.s, A) << "\n";
  return 0;
}

int cmd_icl(const ResolvedInput& in, const std::string& set_csv) {
  const PointSet A = parse_set(in.s, set_csv);
  const ClosureResult r = icl(in.s, A);
  std::cout << "closure: " << in.s.format_set(r.closure) << "\n";
  std::cout << "delta:   " << delta(in.s, r.closure) << "\n";
  std::cout << "dim:     " << dim(in.s, A) << "\n";
  return 0;
}

int cmd_strong(const ResolvedInput& in, const std::string& set_csv) {
  const PointSet A = parse_set(in.s, set_csv);
  std::cout << (is_strong(in.s, A) ? "strong" : "not strong") << "\n";
  return 0;
}

int cmd_good_pairs(const ResolvedInput& in, int max_ext, bool dedup) {
  const std::vector<GoodPair> pairs =
      dedup ? enumerate_good_pairs(in.s, max_ext)
            : enumerate_good_pairs_all(in.s, max_ext);
  std::cout << pairs.size() << " good pair" << (pairs.size() == 1 ? "" : "s")
            << " (extensions up to " << max_ext << " points)\n";
  for (const GoodPair& gp : pairs) {
    std::cout << "  " << in.s.format_set(gp.A) << " over "
              << in.s.format_set(gp.B)
              << (gp.kind == GoodPair::Kind::Alpha ? "  [alpha]" : "")
              << "  chi=" << chi(in.s, gp) << "  code=" << to_hex(gp.code)
              << "\n";
  }
  return 0;
}

int cmd_chi(const ResolvedInput& in, const std::string& ext_csv,
            const std::string& over_csv) {
  std::cout << chi(in.s, parse_set(in.s, ext_csv), parse_set(in.s, over_csv))
            << "\n";
  return 0;
}

int cmd_lmu_check(const ResolvedInput& in, const std::string& mu_path,
                  int max_ext) {
  const std::optional<MuFunction> mu = resolve_mu(in, mu_path);
  if (!mu) throw UsageError("lmu-check needs --mu (no bundled bound function)");
  const LmuReport rep = in_Lmu(in.s, *mu, max_ext);
  if (rep.ok) {
    std::cout << "no violations\n";
    return 0;
  }
  for (const LmuViolation& v : rep.violations)
    std::cout << "violation: " << in.s.format_set(v.A) << " over "
              << in.s.format_set(v.B) << "  chi=" << v.chi_value
              << " > mu=" << v.mu_bound << "\n";
  return 1;
}

int cmd_amalgamate(const ResolvedInput& left, const ResolvedInput& right,
                   const std::string& glue_arg, const std::string& mu_path) {
  std::vector<std::pair<int, int>> glue;
  if (!glue_arg.empty()) {
    for (const std::string& part : split(glue_arg, ',')) {
      const std::vector<std::string> sides = split(part, '=');
      if (sides.size() != 2 || sides[0].empty() || sides[1].empty())
        throw UsageError("--glue expects name=name[,name=name...]");
      glue.emplace_back(left.s.index_of(sides[0]),
                        right.s.index_of(sides[1]));
    }
  }
  std::optional<MuFunction> mu;
  if (!mu_path.empty()) mu = MuFunction::parse(read_file(mu_path));
  const AmalgamResult r =
      free_amalgam(left.s, right.s, glue, mu ? &*mu : nullptr);
  for (const auto& [a, b] : r.identified)
    std::cerr << "identified: " << r.result.name(a) << " = "
              << r.result.name(b) << "\n";
  std::cout << serialize(r.result);
  return 0;
}

int cmd_build_generic(const ResolvedInput& in, const std::string& mu_path,
                      int budget,
                      const std::vector<std::string>& alpha_args,
                      const std::vector<std::string>& copy_args) {
  const std::optional<MuFunction> mu = resolve_mu(in, mu_path);
  if (!mu)
    throw UsageError("build-generic needs --mu (no bundled bound function)");
  std::vector<BuildDemand> demands;
  for (const std::string& arg : alpha_args)
    demands.push_back(alpha_demand(in.s, parse_set(in.s, arg)));
  for (const std::string& arg : copy_args) {
    const std::vector<std::string> sides = split(arg, '/');
    if (sides.size() != 2)
      throw UsageError("--demand-copy expects ext-names/base-names");
    demands.push_back(copy_demand(in.s, parse_set(in.s, sides[0]),
                                  parse_set(in.s, sides[1])));
  }
  const BuildResult r = build_generic(in.s, *mu, budget, demands);
  std::cerr << format_build_log(r);
  if (r.budget_exhausted) std::cerr << "budget exhausted\n";
  for (std::size_t i : r.unmet) std::cerr << "unmet demand #" << i << "\n";
  std::cout << serialize(r.result);
  return r.unmet.empty() && !r.budget_exhausted ? 0 : 1;
}

int cmd_linear_decompose(const ResolvedInput& in, const std::string& base_csv) {
  const LinearDecomposition ld =
      linear_decompose(in.s, parse_set(in.s, base_csv));
  std::cout << "start: " << in.s.format_set(ld.start) << "\n";
  for (std::size_t t = 0; t < ld.steps.size(); ++t)
    std::cout << "step " << t + 1 << ": add "
              << in.s.format_set(ld.steps[t].ext) << " over "
              << in.s.format_set(ld.steps[t].base) << "\n";
  return 0;
}

int cmd_decompose(const ResolvedInput& in, const std::string& base_csv,
                  const std::string& group, const std::string& mu_path) {
  const std::optional<MuFunction> mu = resolve_mu(in, mu_path);
  const StabilizerKind kind = group == "setwise" ? StabilizerKind::Setwise
                                                 : StabilizerKind::Pointwise;
  const TreeDecomposition td = tree_decompose(
      in.s, parse_set(in.s, base_csv), kind, mu ? &*mu : nullptr);
  std::cout << "height: " << td.height << "\n";
  for (std::size_t t = 0; t < td.strata.size(); ++t)
    std::cout << "stratum " << t << ": " << in.s.format_set(td.strata[t])
              << "\n";
  for (std::size_t i = 0; i < td.clusters.size(); ++i) {
    const Cluster& cl = td.clusters[i];
    std::cout << "cluster " << i << " (stratum " << cl.stratum << ", over "
              << in.s.format_set(cl.base) << "): petals";
    for (PointSet p : cl.petals) std::cout << " " << in.s.format_set(p);
    std::cout << "  ell=" << cl.ell << " nu=" << cl.nu;
    if (cl.mu) std::cout << " mu=" << *cl.mu;
    std::cout << (cl.transitive ? "  [transitive]" : "") << "\n";
  }
  auto print_groups = [&](const char* label,
                          const std::vector<std::vector<int>>& groups) {
    std::cout << label << ":";
    for (const auto& g : groups) {
      std::cout << " {";
      for (std::size_t j = 0; j < g.size(); ++j)
        std::cout << (j ? " " : "") << g[j];
      std::cout << "}";
    }
    std::cout << "\n";
  };
  print_groups("star partition (petal indices)", td.star_partition);
  print_groups("j-classes (cluster indices)", td.j_classes);
  return 0;
}

int cmd_flowers(const ResolvedInput& in, const std::string& ext_csv,
                const std::string& over_csv, const std::string& gbase_csv) {
  GoodPair gp;
  gp.ambient = &in.s;
  gp.A = parse_set(in.s, ext_csv);
  gp.B = parse_set(in.s, over_csv);
  const PointSet gbase =
      gbase_csv.empty() ? gp.B : parse_set(in.s, gbase_csv);
  const Bouquet bq = flowers_and_bouquet(in.s, gp, gbase);
  std::cout << bq.flowers.size() << " flower"
            << (bq.flowers.size() == 1 ? "" : "s") << "\n";
  for (std::size_t i = 0; i < bq.flowers.size(); ++i) {
    const Flower& f = bq.flowers[i];
    std::cout << "flower " << i << ": arrangement";
    for (int p : f.arrangement) std::cout << " " << in.s.name(p);
    std::cout << "\n  petals:";
    for (PointSet p : f.petals) std::cout << " " << in.s.format_set(p);
    std::cout << "\n  certificates: " << f.certificates.size()
              << " (sizes";
    for (const auto& cert : f.certificates) std::cout << " " << cert.size();
    std::cout << ")\n";
  }
  return 0;
}

json element_row_json(const Structure& s, const ElementReport& er) {
  json row;
  row["element"] = s.name(er.point);
  row["orbit"] = s.names_of(er.orbit);
  row["dcl"] = er.in_dcl;
  row["sdcl"] = er.in_sdcl;
  row["dclstar"] = verdict_name(er.in_dclstar);
  row["sdclstar"] = verdict_name(er.in_sdclstar);
  row["safe"] = er.safe;
  return row;
}

int cmd_orbits(const ResolvedInput& in, const std::string& over_csv,
               const std::string& group, bool assume_normal) {
  const PointSet I = parse_set(in.s, over_csv);
  const GroupKind kind =
      group == "setwise" ? GroupKind::Setwise : GroupKind::Pointwise;
  const OrbitReport rep =
      orbit_report(in.s, I, kind, resolve_certificate(in, assume_normal));
  std::cout << "group order: " << rep.group_order
            << (rep.certified ? "" : "  (normality assumed)") << "\n";
  std::cout << "fixed: " << in.s.format_set(rep.fixed) << "\n";
  for (const PointSet orb : rep.orbits)
    std::cout << "orbit: " << in.s.format_set(orb) << "\n";
  return 0;
}

int cmd_dclstar(const ResolvedInput& in, const std::string& over_csv,
                bool assume_normal, bool as_json) {
  const PointSet I = parse_set(in.s, over_csv);
  const NormalityCertificate cert = resolve_certificate(in, assume_normal);
  const OrbitReport rep = orbit_report(in.s, I, GroupKind::Pointwise, cert);
  if (as_json) {
    json out;
    out["over"] = in.s.names_of(I);
    out["certified"] = rep.certified;
    out["pointwise_order"] = rep.stars.pointwise_order;
    out["setwise_order"] = rep.stars.setwise_order;
    out["dclstar_trace"] = in.s.names_of(rep.stars.dclstar_trace);
    out["sdclstar_trace"] = in.s.names_of(rep.stars.sdclstar_trace);
    out["elements"] = json::array();
    for (const ElementReport& er : rep.per_element)
      out["elements"].push_back(element_row_json(in.s, er));
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "over " << in.s.format_set(I) << "  pointwise order "
            << rep.stars.pointwise_order << ", setwise order "
            << rep.stars.setwise_order
            << (rep.certified ? "" : "  (normality assumed)") << "\n";
  std::cout << std::left << std::setw(10) << "element" << std::setw(16)
            << "orbit" << std::setw(6) << "dcl" << std::setw(14) << "dcl*"
            << std::setw(6) << "sdcl" << std::setw(14) << "sdcl*" << "safe"
            << "\n";
  for (const ElementReport& er : rep.per_element) {
    std::cout << std::left << std::setw(10) << in.s.name(er.point)
              << std::setw(16) << in.s.format_set(er.orbit) << std::setw(6)
              << yes_no(er.in_dcl) << std::setw(14)
              << verdict_name(er.in_dclstar) << std::setw(6)
              << yes_no(er.in_sdcl) << std::setw(14)
              << verdict_name(er.in_sdclstar) << yes_no(er.safe) << "\n";
  }
  std::cout << "dcl* trace:  " << in.s.format_set(rep.stars.dclstar_trace)
            << "\n";
  std::cout << "sdcl* trace: " << in.s.format_set(rep.stars.sdclstar_trace)
            << "\n";
  return 0;
}

int cmd_quasigroup(const ResolvedInput& in, const std::string& line_csv,
                   const std::string& over_csv) {
  const QuasigroupReport rep = quasigroup_experiment(
      in.s, parse_set(in.s, line_csv), parse_set(in.s, over_csv));
  std::cout << "line: " << in.s.format_set(rep.line) << "\n";
  std::cout << "free points: " << in.s.format_set(rep.free) << "\n";
  std::cout << "stabilizer order: " << rep.stabilizer_order
            << (rep.acts_full_symmetric ? "  (full symmetric action)" : "")
            << "\n";
  if (rep.line_too_short)
    std::cout << "line has only 3 points: the product is forced\n";
  else
    std::cout << "candidate product orbit size: " << rep.product_orbit
              << "\n";
  std::cout << "verdict: " << rep.verdict << "\n";
  return 0;
}

int cmd_verify(const std::string& name) {
  std::vector<std::string> names;
  if (name == "all") {
    for (const FixtureInfo& fi : fixture_registry()) names.push_back(fi.name);
  } else {
    names.push_back(name);
  }
  bool all_pass = true;
  for (const std::string& n : names) {
    const FixtureReport rep = verify_fixture(n);
    std::cout << "== " << rep.name << "\n";
    for (const FixtureCheck& ch : rep.checks) {
      std::cout << "  " << (ch.pass ? "pass" : "FAIL") << "  " << ch.label;
      if (!ch.pass) std::cout << "  (" << ch.detail << ")";
      std::cout << "\n";
    }
    if (!rep.all_pass) all_pass = false;
  }
  std::cout << (all_pass ? "all assertions pass" : "assertions FAILED")
            << "\n";
  return all_pass ? 0 : 1;
}

int cmd_selftest(std::uint64_t seed, int rounds) {
  const SelftestReport rep = run_selftest(seed, rounds);
  for (const FixtureCheck& ch : rep.checks) {
    std::cout << (ch.pass ? "pass" : "FAIL") << "  " << ch.label << "  ["
              << ch.detail << "]\n";
  }
  std::cout << (rep.all_pass ? "selftest: all pass" : "selftest: FAILED")
            << "\n";
  return rep.all_pass ? 0 : 1;
}

int dispatch(int argc, char** argv) {
  CLI::App app{
      "finite-structure toolkit: predimension, closure, good pairs,\n"
      "amalgamation, decomposition, and definability reports"};
  app.require_subcommand(1);

  // Common option storage.
  std::string input, right_input, set_csv, ext_csv, over_csv, base_csv;
  std::string line_csv, glue_arg, mu_path, gbase_csv;
  std::string group = "pointwise";
  int max_ext = 4, budget = 20, rounds = 500;
  std::uint64_t seed = 1;
  bool dedup = false, assume_normal = false, as_json = false;
  std::vector<std::string> alpha_args, copy_args;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input,
                    "structure: fixture name or file path")
        ->required();
  };
  auto add_group = [&](CLI::App* cmd) {
    cmd->add_option("--group", group, "stabilizer kind (default pointwise)")
        ->check(CLI::IsMember({"pointwise", "setwise"}));
  };

  CLI::App* c_delta = app.add_subcommand("delta", "predimension of a set");
  add_input(c_delta);
  c_delta->add_option("--set", set_csv, "point names (default: all points)");

  CLI::App* c_icl = app.add_subcommand("icl", "self-sufficient closure");
  add_input(c_icl);
  c_icl->add_option("--set", set_csv, "point names")->required();

  CLI::App* c_strong = app.add_subcommand("strong", "self-sufficiency test");
  add_input(c_strong);
  c_strong->add_option("--set", set_csv, "point names")->required();

  CLI::App* c_gp = app.add_subcommand("good-pairs", "enumerate good pairs");
  add_input(c_gp);
  c_gp->add_option("--max-ext", max_ext, "largest extension size (default 4)");
  c_gp->add_flag("--dedup", dedup, "keep one pair per isomorphism code");

  CLI::App* c_chi = app.add_subcommand("chi", "disjoint-copy count");
  add_input(c_chi);
  c_chi->add_option("--ext", ext_csv, "extension point names")->required();
  c_chi->add_option("--over", over_csv, "base point names")->required();

  CLI::App* c_lmu = app.add_subcommand("lmu-check",
                                       "check copy counts against the bound");
  add_input(c_lmu);
  c_lmu->add_option("--mu", mu_path, "bound-function file");
  c_lmu->add_option("--max-ext", max_ext, "largest extension size (default 4)");

  CLI::App* c_am = app.add_subcommand("amalgamate", "free amalgam of two structures");
  c_am->add_option("left", input, "left structure")->required();
  c_am->add_option("right", right_input, "right structure")->required();
  c_am->add_option("--glue", glue_arg, "identified points: left=right[,...]");
  c_am->add_option("--mu", mu_path, "bound-function file (caps merged lines)");

  CLI::App* c_bg = app.add_subcommand("build-generic",
                                      "grow a seed by bounded amalgamation");
  add_input(c_bg);
  c_bg->add_option("--mu", mu_path, "bound-function file");
  c_bg->add_option("--budget", budget, "point budget (default 20)");
  c_bg->add_option("--demand-alpha", alpha_args,
                   "demand a related point over a 2-point base (names)");
  c_bg->add_option("--demand-copy", copy_args,
                   "demand a copy: ext-names/base-names");

  CLI::App* c_ld = app.add_subcommand("linear-decompose",
                                      "chain decomposition over a base");
  add_input(c_ld);
  c_ld->add_option("--base", base_csv, "base point names")->required();

  CLI::App* c_td = app.add_subcommand("decompose",
                                      "tree decomposition over a base");
  add_input(c_td);
  c_td->add_option("--base", base_csv, "base point names")->required();
  add_group(c_td);
  c_td->add_option("--mu", mu_path, "bound-function file");

  CLI::App* c_fl = app.add_subcommand("flowers", "flowers and bouquet of a pair");
  add_input(c_fl);
  c_fl->add_option("--ext", ext_csv, "extension point names")->required();
  c_fl->add_option("--over", over_csv, "base point names")->required();
  c_fl->add_option("--group-base", gbase_csv,
                   "stabilized set (default: the base)");

  CLI::App* c_orb = app.add_subcommand("orbits", "orbits under a stabilizer");
  add_input(c_orb);
  c_orb->add_option("--over", over_csv, "stabilized point names (default none)");
  add_group(c_orb);
  c_orb->add_flag("--assume-normal", assume_normal,
                  "treat an ad-hoc input as normal");

  CLI::App* c_dc = app.add_subcommand("dclstar", "definability report");
  add_input(c_dc);
  c_dc->add_option("--over", over_csv, "base point names")->required();
  c_dc->add_flag("--assume-normal", assume_normal,
                 "treat an ad-hoc input as normal");
  c_dc->add_flag("--json", as_json, "machine-readable report");

  CLI::App* c_qg = app.add_subcommand("quasigroup",
                                      "product-definability experiment");
  add_input(c_qg);
  c_qg->add_option("--line", line_csv, "full-line point names")->required();
  c_qg->add_option("--over", over_csv, "2-point base on the line")->required();

  CLI::App* c_vf = app.add_subcommand("verify", "run a fixture's assertion table");
  c_vf->add_option("input", input, "fixture name, or 'all'")->required();

  CLI::App* c_st = app.add_subcommand("selftest", "run the property suite");
  c_st->add_option("--seed", seed, "random seed (default 1)");
  c_st->add_option("--rounds", rounds,
                   "random structures per flavor (default 500)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (c_vf->parsed()) return cmd_verify(input);
  if (c_st->parsed()) return cmd_selftest(seed, rounds);

  const ResolvedInput in = resolve_structure(input);
  if (c_delta->parsed()) return cmd_delta(in, set_csv);
  if (c_icl->parsed()) return cmd_icl(in, set_csv);
  if (c_strong->parsed()) return cmd_strong(in, set_csv);
  if (c_gp->parsed()) return cmd_good_pairs(in, max_ext, dedup);
  if (c_chi->parsed()) return cmd_chi(in, ext_csv, over_csv);
  if (c_lmu->parsed()) return cmd_lmu_check(in, mu_path, max_ext);
  if (c_am->parsed())
    return cmd_amalgamate(in, resolve_structure(right_input), glue_arg,
                          mu_path);
  if (c_bg->parsed())
    return cmd_build_generic(in, mu_path, budget, alpha_args, copy_args);
  if (c_ld->parsed()) return cmd_linear_decompose(in, base_csv);
  if (c_td->parsed()) return cmd_decompose(in, base_csv, group, mu_path);
  if (c_fl->parsed()) return cmd_flowers(in, ext_csv, over_csv, gbase_csv);
  if (c_orb->parsed()) return cmd_orbits(in, over_csv, group, assume_normal);
  if (c_dc->parsed()) return cmd_dclstar(in, over_csv, assume_normal, as_json);
  if (c_qg->parsed()) return cmd_quasigroup(in, line_csv, over_csv);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError) {
      std::cerr << "parse error: " << e.what() << "\n";
      return 2;
    }
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
