// Tests for the worked-example registry: the embedded texts must stay in
// lockstep with the files shipped under fixtures/, lookups must fail loudly,
// and every registered example must pass its own recorded-fact audit.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "smc/error.hpp"
#include "smc/fixtures.hpp"
#include "smc/structure.hpp"

using namespace smc;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "cannot open " << path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("registry lists the ten worked examples in a stable order") {
  const auto& reg = fixture_registry();
  REQUIRE(reg.size() == 10);
  const std::vector<std::string> expected = {
      "examp1",          "examp2",      "examp2-sym",  "steiner-ce",
      "overlap-flowers", "overlap-flowers-2", "k4-design",
      "alpha-line-3",    "alpha-line-4", "alpha-line-5"};
  for (std::size_t i = 0; i < reg.size(); ++i) {
    CAPTURE(i);
    CHECK(reg[i].name == expected[i]);
    CHECK(reg[i].struct_text != nullptr);
    CHECK(reg[i].mu_text != nullptr);
  }
}

TEST_CASE("embedded texts match the files shipped in the fixtures directory") {
  const std::string dir = SMC_FIXTURE_DIR;
  for (const auto& f : fixture_registry()) {
    CAPTURE(f.name);
    CHECK(slurp(dir + "/" + f.name + ".struct") == std::string(f.struct_text));
    CHECK(slurp(dir + "/" + f.name + ".mu") == std::string(f.mu_text));
  }
}

TEST_CASE("lookup helpers agree and unknown names are rejected") {
  CHECK(is_fixture("examp1"));
  CHECK(is_fixture("alpha-line-5"));
  CHECK_FALSE(is_fixture("examp3"));
  CHECK_FALSE(is_fixture(""));
  CHECK_FALSE(is_fixture("Examp1"));  // names are case-sensitive

  for (const char* bad : {"examp3", "nope"}) {
    CAPTURE(bad);
    try {
      (void)fixture_info(bad);
      FAIL("fixture_info should have thrown");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::UnknownFixture);
      CHECK(std::string(e.what()).find("no fixture named") != std::string::npos);
    }
    try {
      (void)fixture_structure(bad);
      FAIL("fixture_structure should have thrown");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::UnknownFixture);
    }
    try {
      (void)verify_fixture(bad);
      FAIL("verify_fixture should have thrown");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::UnknownFixture);
    }
  }
}

TEST_CASE("structures and bound functions parse straight from the registry") {
  CHECK(fixture_structure("examp1").n() == 6);
  CHECK(fixture_structure("examp2").n() == 14);
  CHECK(fixture_structure("examp2-sym").n() == 26);
  CHECK(fixture_structure("steiner-ce").n() == 22);
  CHECK(fixture_structure("k4-design").n() == 4);
  CHECK(fixture_structure("alpha-line-3").n() == 3);
  CHECK(fixture_structure("alpha-line-4").n() == 4);
  CHECK(fixture_structure("alpha-line-5").n() == 5);

  CHECK(fixture_structure("examp1").flavor() == Flavor::Hypergraph);
  CHECK(fixture_structure("steiner-ce").flavor() == Flavor::LinearSpace);
  CHECK(fixture_structure("alpha-line-4").flavor() == Flavor::LinearSpace);

  // Each bound function must accept its own structure's good-pair catalog.
  for (const auto& f : fixture_registry()) {
    CAPTURE(f.name);
    const MuFunction mu = fixture_mu(f.name);
    CHECK(mu.serialize() == std::string(f.mu_text));
  }
}

TEST_CASE("normality certificates mirror the registry flags") {
  const NormalityCertificate c1 = fixture_certificate("examp1");
  CHECK(c1.pointwise);
  CHECK(c1.setwise);
  CHECK_FALSE(c1.assumed);

  // The two large examples are certified for pointwise stabilizers only.
  for (const char* name : {"examp2", "steiner-ce"}) {
    CAPTURE(name);
    const NormalityCertificate c = fixture_certificate(name);
    CHECK(c.pointwise);
    CHECK_FALSE(c.setwise);
    CHECK(c.any());
  }

  for (const auto& f : fixture_registry()) {
    CAPTURE(f.name);
    const NormalityCertificate c = fixture_certificate(f.name);
    CHECK(c.pointwise == f.certified_pointwise);
    CHECK(c.setwise == f.certified_setwise);
    CHECK_FALSE(c.assumed);
  }
}

TEST_CASE("every registered example passes its recorded-fact audit") {
  for (const auto& f : fixture_registry()) {
    CAPTURE(f.name);
    const FixtureReport report = verify_fixture(f.name);
    CHECK(report.name == f.name);
    CHECK_FALSE(report.checks.empty());
    for (const auto& check : report.checks) {
      CAPTURE(check.label);
      CAPTURE(check.detail);
      CHECK(check.pass);
    }
    CHECK(report.all_pass);
  }
}
