#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>

#include "gradedring/errors.hpp"
#include "gradedring/gallery.hpp"

using namespace gradedring;

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::string& args) {
  const std::string cmd = std::string(GRADEDRING_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string data(const std::string& name) { return std::string(TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Gallery, AllItemsPass) {
  for (const auto& id : gallery_ids()) {
    SCOPED_TRACE(id);
    const GalleryReport r = run_gallery(id);
    EXPECT_FALSE(r.checks.empty());
    const Json j = gallery_json(r);
    EXPECT_EQ(j["schema"], 1);
    EXPECT_TRUE(j["passed"].get<bool>());
  }
}

TEST(Gallery, Transcripts) {
  const GalleryReport l = run_gallery("laurent_unit");
  ASSERT_FALSE(l.transcript.empty());
  EXPECT_EQ(l.transcript[0], "(2*x + 3*x^-1)*(3*x + 2*x^-1) = 1");
  const GalleryReport d = run_gallery("deligne");
  EXPECT_EQ(d.transcript.back(), "homogeneous annihilator: a2*a3*T");
  const GalleryReport t = run_gallery("torsion_nilradical(3)");
  EXPECT_NE(t.transcript[0].find("x + 2 is nilpotent"), std::string::npos);
}

TEST(Gallery, BadIds) {
  EXPECT_THROW(run_gallery("nonsense"), PreconditionError);
  EXPECT_THROW(run_gallery("torsion_nilradical(7)"), PreconditionError);
  EXPECT_THROW(run_gallery("deligne(2)"), PreconditionError);
}

TEST(Cli, DecideJson) {
  const CliRun r = cli("decide unit " + data("laurent_z6.ring") + " f --json");
  EXPECT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["verdict"], "unit");
  EXPECT_EQ(j["certificate"]["inverse"], "3*x + 2*x^-1");
  EXPECT_TRUE(j["verified"].get<bool>());
}

TEST(Cli, OracleReport) {
  const CliRun r = cli("oracle " + data("cyclic_z5.ring") + " --report --json");
  EXPECT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["cardinality"], 3125);
  EXPECT_FALSE(j["nilradical"]["graded"].get<bool>());
  EXPECT_FALSE(j["jacobson_radical"]["graded"].get<bool>());
}

TEST(Cli, Spectra) {
  const CliRun l = cli("spectra laurent --n 12 --json");
  EXPECT_EQ(l.code, 0);
  EXPECT_EQ(Json::parse(l.out)["graded_primes"].size(), 2u);
  const CliRun p = cli("spectra " + data("trunc_z6_k3.ring") + " --pi0 --json");
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(Json::parse(p.out)["counts"]["spec_star"], 2);
  const CliRun q = cli("spectra proj " + data("plane.ring") + " --gens \"x^2*y,x*y^2\" --cap 10 --json");
  EXPECT_EQ(q.code, 0);
  EXPECT_EQ(Json::parse(q.out)["result"], "unknown");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("").code, 1);
  EXPECT_EQ(cli("decide unit " + data("missing.ring") + " x").code, 1);
  EXPECT_EQ(cli("decide unit " + data("plane.ring") + " \"x +\"").code, 1);
  EXPECT_EQ(cli("--cap 100 oracle " + data("cyclic_z5.ring")).code, 2);
  EXPECT_EQ(cli("gallery mccoy_z6").code, 0);
  EXPECT_EQ(cli("parse " + data("deligne.ring")).code, 0);
  EXPECT_EQ(cli("eval " + data("trunc_z6_k3.ring") + " \"(3 + x)^2\"").out, "x^2 + 3\n");
}

TEST(Cli, ReportsAreDeterministic) {
  const std::string args = "oracle " + data("trunc_z12_k2.ring") + " --json";
  EXPECT_EQ(cli(args).out, cli(args).out);
  EXPECT_EQ(cli("gallery all --json").out, cli("gallery all --json").out);
}
