// End-to-end tests for the command-line tool.  Each case shells out to the
// built binary (path injected by the build) and checks exit status, stdout,
// and stderr.  Output must be byte-deterministic across identical runs.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run_cli(const std::string& args) {
  const std::string out_path = "cli_stdout.tmp";
  const std::string err_path = "cli_stderr.tmp";
  const std::string cmd =
      std::string(SMC_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

const std::string kDir = SMC_FIXTURE_DIR;

}  // namespace

TEST_CASE("delta accepts both file paths and registry names") {
  RunResult byFile =
      run_cli("delta " + kDir + "/examp1.struct --set a1,a2,b1,b2,c1,c2");
  CHECK(byFile.exit_code == 0);
  CHECK(byFile.out == "2\n");

  RunResult byName = run_cli("delta examp1 --set a1,a2,b1,b2,c1,c2");
  CHECK(byName.exit_code == 0);
  CHECK(byName.out == "2\n");

  RunResult wholeSet = run_cli("delta examp1");
  CHECK(wholeSet.exit_code == 0);
  CHECK(wholeSet.out == "2\n");
}

TEST_CASE("icl reports the closure with its predimension and dimension") {
  RunResult r = run_cli("icl examp1 --set c1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "closure:"));
  CHECK(contains(r.out, "delta:"));
  CHECK(contains(r.out, "dim:"));
}

TEST_CASE("strong prints a verdict and exits zero either way") {
  RunResult yes = run_cli("strong examp1 --set a1,a2");
  CHECK(yes.exit_code == 0);
  CHECK(yes.out == "strong\n");

  RunResult no = run_cli("strong overlap-flowers --set b1,b2,b3");
  CHECK(no.exit_code == 0);
  CHECK(no.out == "not strong\n");
}

TEST_CASE("good-pairs enumerates and dedups") {
  RunResult all = run_cli("good-pairs examp1 --max-ext 4");
  CHECK(all.exit_code == 0);
  CHECK(contains(all.out, "6 good pairs (extensions up to 4 points)"));
  CHECK(contains(all.out, "chi="));
  CHECK(contains(all.out, "code="));

  RunResult dedup = run_cli("good-pairs examp1 --max-ext 4 --dedup");
  CHECK(dedup.exit_code == 0);
  CHECK(contains(dedup.out, "2 good pairs"));
}

TEST_CASE("lmu-check is quiet when clean and exits one on a violation") {
  RunResult clean =
      run_cli("lmu-check examp1 --mu " + kDir + "/examp1.mu --max-ext 4");
  CHECK(clean.exit_code == 0);
  CHECK(contains(clean.out, "no violations"));

  // A bound of one on alpha pairs is too small for the 4-point line.
  RunResult bad =
      run_cli("lmu-check alpha-line-4 --mu " + kDir + "/alpha-line-3.mu");
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.out, "violation:"));
  CHECK(contains(bad.out, "chi=2 > mu=1"));
}

TEST_CASE("decompose renders the tree over the chosen base") {
  RunResult r = run_cli("decompose examp1 --base a1,a2 --group pointwise");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "height: 2"));
  CHECK(contains(r.out, "stratum"));
  CHECK(contains(r.out, "cluster"));
  CHECK(contains(r.out, "star partition"));
  CHECK(contains(r.out, "j-classes"));
}

TEST_CASE("linear-decompose lists the chain steps") {
  RunResult r = run_cli("linear-decompose examp1 --base a1,a2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "start: "));
  CHECK(contains(r.out, "step 1: add "));
  CHECK(contains(r.out, " over "));
}

TEST_CASE("orbits reports the stabilizer order and orbit rows") {
  RunResult r = run_cli("orbits examp1 --over a1,a2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "group order: 4"));
  CHECK(contains(r.out, "fixed:"));
  CHECK(contains(r.out, "orbit:"));
}

TEST_CASE("dclstar emits a machine-readable report on request") {
  RunResult r = run_cli("dclstar examp2 --over a1,a2 --json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"pointwise_order\": 32"));
  CHECK(contains(r.out, "\"setwise_order\": 32"));
  CHECK(contains(r.out, "\"dclstar_trace\""));
  CHECK(contains(r.out, "\"alpha1\""));
  CHECK(contains(r.out, "\"dclstar\": \"yes\""));
  CHECK(contains(r.out, "\"sdclstar\": \"undetermined\""));

  RunResult text = run_cli("dclstar examp2 --over a1,a2");
  CHECK(text.exit_code == 0);
  CHECK(contains(text.out, "dcl* trace:"));
  CHECK(contains(text.out, "sdcl* trace:"));
}

TEST_CASE("quasigroup distinguishes forced and free products") {
  RunResult forced =
      run_cli("quasigroup alpha-line-3 --line a1,a2,x1 --over a1,a2");
  CHECK(forced.exit_code == 0);
  CHECK(contains(forced.out, "line has only 3 points"));
  CHECK(contains(forced.out, "verdict: definable-product"));

  RunResult open =
      run_cli("quasigroup alpha-line-4 --line a1,a2,x1,x2 --over a1,a2");
  CHECK(open.exit_code == 0);
  CHECK(contains(open.out, "stabilizer order: 2"));
  CHECK(contains(open.out, "full symmetric action"));
  CHECK(contains(open.out, "verdict: no-definable-product"));
}

TEST_CASE("verify prints one line per assertion and a closing summary") {
  RunResult r = run_cli("verify examp2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "== examp2"));
  CHECK(contains(r.out, "pass"));
  CHECK_FALSE(contains(r.out, "FAIL"));
  CHECK(contains(r.out, "all assertions pass"));
}

TEST_CASE("usage errors exit with status two") {
  RunResult unknown = run_cli("delta no-such-input --set a1");
  CHECK(unknown.exit_code == 2);
  CHECK(contains(unknown.err, "no fixture or readable file named"));

  RunResult badFlag = run_cli("delta examp1 --nope");
  CHECK(badFlag.exit_code == 2);

  RunResult badGroup = run_cli("decompose examp1 --base a1,a2 --group sideways");
  CHECK(badGroup.exit_code == 2);

  std::ofstream("cli_bad.struct") << "flavor: nope\n";
  RunResult badParse = run_cli("delta cli_bad.struct");
  CHECK(badParse.exit_code == 2);
  std::remove("cli_bad.struct");
}

TEST_CASE("semantic failures exit with status one") {
  RunResult r = run_cli("delta examp1 --set zz");
  CHECK(r.exit_code == 1);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("output is byte-deterministic across identical runs") {
  const std::string cmds[] = {
      "good-pairs examp1 --max-ext 4",
      "decompose examp1 --base a1,a2 --group pointwise",
      "dclstar examp2 --over a1,a2 --json",
  };
  for (const std::string& cmd : cmds) {
    CAPTURE(cmd);
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
  }
}
