#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

namespace {

using nlohmann::json;

struct CliRun {
  int status = -1;
  std::string out;
};

std::string fixturePath(const std::string& name) {
  return std::string(SCTK_FIXTURE_DIR) + "/" + name + ".json";
}

CliRun sctk(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(SCTK_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::filesystem::path tempFile(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("sctk_cli_test_" + name);
}

TEST(Cli, ExampleOneCertified) {
  const CliRun r = sctk("check " + fixturePath("example1_composite") + " --partition '1,2;3,4,5'");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("[pbh] CONTROLLABLE"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("[kalman] CONTROLLABLE"), std::string::npos);
  EXPECT_NE(r.out.find("[matroid] CERTIFIED"), std::string::npos);
  EXPECT_NE(r.out.find("base {a3,a4,a7}"), std::string::npos);
}

TEST(Cli, JsonReport) {
  const CliRun r = sctk("check " + fixturePath("example2_pendulum") + " --partition '1,2;3,4;5,6' --json");
  ASSERT_EQ(r.status, 0);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc.at("n"), 6);
  EXPECT_EQ(doc.at("m"), 1);
  EXPECT_EQ(doc.at("exit_status"), 0);
  ASSERT_EQ(doc.at("results").size(), 3u);
  const json& cert = doc.at("results")[2].at("certificate");
  EXPECT_EQ(cert.at("blocks")[0].at("base"), json::parse(R"(["a4", "a5"])"));
  EXPECT_EQ(cert.at("blocks")[1].at("base"), json::parse(R"(["a6", "a7"])"));
  EXPECT_EQ(cert.at("blocks")[2].at("base"), json::parse(R"(["a2", "a3"])"));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(sctk("check " + fixturePath("uncontrollable_diag")).status, 1);
  EXPECT_EQ(sctk("check " + fixturePath("uncontrollable_diag") + " --method matroid").status, 2);
  EXPECT_EQ(sctk("check " + fixturePath("bridge") + " --method kalman").status, 0);
  EXPECT_EQ(sctk("check " + fixturePath("example1_composite") + " --method pbh --max-columns 6").status, 2);
  EXPECT_EQ(sctk("check /nonexistent.json").status, 3);
  EXPECT_EQ(sctk("check " + fixturePath("bridge") + " --partition '1;3'").status, 3);
  EXPECT_EQ(sctk("check " + fixturePath("bridge") + " --method bogus").status, 3);
  EXPECT_EQ(sctk("frobnicate").status, 3);
  EXPECT_EQ(sctk("").status, 3);
}

TEST(Cli, ParseErrorsPointAtTheEntry) {
  const CliRun r = sctk("check " + fixturePath("bad_expression"), true);
  EXPECT_EQ(r.status, 3);
  EXPECT_NE(r.out.find("bad_expression.json#A[1][1]:1:2: error: implicit multiplication"), std::string::npos)
      << r.out;
}

TEST(Cli, OutputIsDeterministic) {
  const std::string args = "check " + fixturePath("example2_pendulum") + " --partition '1,2;3,4;5,6' --json";
  EXPECT_EQ(sctk(args).out, sctk(args).out);
  const CliRun seeded = sctk("check " + fixturePath("example1_composite") + " --seed 7 --json");
  const CliRun plain = sctk("check " + fixturePath("example1_composite") + " --json");
  EXPECT_EQ(seeded.status, plain.status);
  EXPECT_EQ(json::parse(seeded.out), json::parse(plain.out));
}

TEST(Cli, VerifyInvalidCertificateFails) {
  const CliRun r = sctk("verify " + fixturePath("example1_composite") + " " +
                     fixturePath("example1_invalid_certificate"));
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("witness -s^2 + s"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("certificate INVALID"), std::string::npos);

  const CliRun overlap = sctk("verify " + fixturePath("example1_composite") + " " +
                           fixturePath("example1_overlapping_certificate") + " --json");
  EXPECT_EQ(overlap.status, 1);
  EXPECT_EQ(json::parse(overlap.out).at("failures")[0], "disjointness: bases 1 and 2 share {a7}");
}

TEST(Cli, ExportedCertificateVerifies) {
  const auto cert = tempFile("pendulum_cert.json");
  const CliRun check = sctk("check " + fixturePath("example2_pendulum") + " --method matroid --partition '1,2;3,4;5,6' " +
                         "--certificate-out " + cert.string());
  ASSERT_EQ(check.status, 0);
  const CliRun verify = sctk("verify " + fixturePath("example2_pendulum") + " " + cert.string() + " --json");
  std::filesystem::remove(cert);
  EXPECT_EQ(verify.status, 0);
  EXPECT_TRUE(json::parse(verify.out).at("valid").get<bool>());
}

TEST(Cli, ComposeMatchesHandWrittenComposite) {
  const auto out = tempFile("composed.json");
  const CliRun compose = sctk("compose " + fixturePath("example1_sigma1") + " " + fixturePath("example1_sigma2") +
                           " -o " + out.string());
  ASSERT_EQ(compose.status, 0) << compose.out;
  std::ifstream in(out);
  const json composed = json::parse(in);
  std::ifstream ref_in(fixturePath("example1_composite"));
  const json reference = json::parse(ref_in);
  EXPECT_EQ(composed.at("parameters"), reference.at("parameters"));
  EXPECT_EQ(composed.at("A"), reference.at("A"));
  EXPECT_EQ(composed.at("B"), reference.at("B"));

  const CliRun a = sctk("check " + out.string() + " --partition '1,2;3,4,5' --json");
  const CliRun b = sctk("check " + fixturePath("example1_composite") + " --partition '1,2;3,4,5' --json");
  std::filesystem::remove(out);
  json ra = json::parse(a.out).at("results");
  json rb = json::parse(b.out).at("results");
  // Only the embedded system name may differ.
  ra[2]["certificate"].erase("system");
  rb[2]["certificate"].erase("system");
  EXPECT_EQ(ra, rb);
}

TEST(Cli, ComposeRejectsMismatchedInputs) {
  const auto out = tempFile("bad_compose.json");
  const CliRun r = sctk("compose " + fixturePath("example1_sigma1") + " " + fixturePath("scalar_integrator") +
                     " -o " + out.string(), true);
  EXPECT_EQ(r.status, 3);
  EXPECT_NE(r.out.find("input dimension mismatch"), std::string::npos) << r.out;
  EXPECT_FALSE(std::filesystem::exists(out));
}

}  // namespace
