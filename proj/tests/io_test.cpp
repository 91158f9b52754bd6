#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "sctk/errors.hpp"
#include "sctk/expr_parser.hpp"

namespace {

using namespace sctk;
using nlohmann::json;

TEST(SystemFile, ParsesDefaultsAndIntegers) {
  const json doc = json::parse(R"({"A": [[0, "z1"], [1, 2]], "B": [["1"], [0]], "parameters": ["z1"]})");
  const SystemFile f = systemFileFromJson(doc);
  EXPECT_EQ(f.name, "system");
  EXPECT_EQ(f.indeterminate, "s");
  EXPECT_EQ(f.a[0][0], "0");
  const SystemDef sys = toSystem(f, "inline");
  EXPECT_EQ(sys.n(), 2u);
  EXPECT_EQ(sys.m(), 1u);
}

TEST(SystemFile, StructuralErrors) {
  EXPECT_THROW(systemFileFromJson(json::array()), UsageError);
  EXPECT_THROW(systemFileFromJson(json::parse(R"({"B": []})")), UsageError);
  EXPECT_THROW(systemFileFromJson(json::parse(R"({"A": [[1.5]], "B": [[1]]})")), UsageError);
  EXPECT_THROW(systemFileFromJson(json::parse(R"({"A": [1], "B": [[1]]})")), UsageError);
  EXPECT_THROW(systemFileFromJson(json::parse(R"({"A": [[1]], "B": [[1]], "parameters": [3]})")), UsageError);
  EXPECT_THROW(readSystemFile("/nonexistent/file.json"), UsageError);

  SystemFile ragged = systemFileFromJson(json::parse(R"({"A": [["1", "2"], ["3"]], "B": [["1"], ["1"]]})"));
  EXPECT_THROW(toSystem(ragged, "ragged"), UsageError);
  SystemFile rows = systemFileFromJson(json::parse(R"({"A": [["1"]], "B": [["1"], ["1"]]})"));
  EXPECT_THROW(toSystem(rows, "rows"), UsageError);
  SystemFile empty = systemFileFromJson(json::parse(R"({"A": [], "B": []})"));
  EXPECT_THROW(toSystem(empty, "empty"), UsageError);
}

TEST(SystemFile, ParseErrorsNameTheEntry) {
  const SystemFile f = systemFileFromJson(json::parse(R"({"A": [["1", "0"], ["0", "z1 + q"]], "B": [["1"], ["0"]], "parameters": ["z1"]})"));
  try {
    toSystem(f, "sys.json");
    FAIL() << "unknown identifier accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseErrorKind::kUnknownIdentifier);
    EXPECT_EQ(e.source(), "sys.json#A[2][2]");
    EXPECT_EQ(e.column(), 6u);
  }
}

TEST(SystemFile, RoundTripThroughJson) {
  for (const char* name : {"example1_composite", "example2_pendulum", "bridge", "no_inputs"}) {
    const SystemDef sys = fixture::load(name);
    const SystemFile f = toSystemFile(sys);
    const SystemDef again = toSystem(systemFileFromJson(toJson(f)), name, sys.space());
    EXPECT_EQ(again.A(), sys.A()) << name;
    EXPECT_EQ(again.B(), sys.B()) << name;
    EXPECT_EQ(again.name(), sys.name());
  }
}

TEST(SystemFile, WriteThenRead) {
  const SystemDef sys = fixture::load("example1_sigma1");
  const auto path = std::filesystem::temp_directory_path() / "sctk_io_test_sigma1.json";
  writeSystemFile(toSystemFile(sys), path);
  const SystemDef again = toSystem(readSystemFile(path), path.string());
  std::filesystem::remove(path);
  EXPECT_EQ(again.A(), sys.A());
  EXPECT_EQ(again.B(), sys.B());
}

TEST(SystemFile, CustomIndeterminate) {
  const json doc = json::parse(R"({"A": [["z1"]], "B": [["1"]], "parameters": ["z1"], "indeterminate": "lambda"})");
  const SystemDef sys = toSystem(systemFileFromJson(doc), "x");
  EXPECT_EQ(sys.space()->sName(), "lambda");
  EXPECT_EQ(toJson(toSystemFile(sys)).at("indeterminate"), "lambda");
  const json bad = json::parse(R"({"A": [["s"]], "B": [["1"]], "indeterminate": "s"})");
  EXPECT_THROW(toSystem(systemFileFromJson(bad), "x"), UsageError);
}

TEST(CertificateJson, RoundTripVerifies) {
  const SystemDef sys = fixture::load("example2_pendulum");
  const Verdict v = certificateSearch(sys, RowPartition::parse("1,2;3,4;5,6", 6));
  ASSERT_TRUE(v.certificate.has_value());
  const json doc = certificateToJson(*v.certificate, sys);
  EXPECT_EQ(doc.at("n"), 6);
  EXPECT_EQ(doc.at("blocks").size(), 3u);
  EXPECT_EQ(doc.at("blocks")[2].at("rows"), json::parse("[5, 6]"));
  const CertificateClaim claim = claimFromJson(json::parse(doc.dump()), sys);
  ASSERT_EQ(claim.witnesses.size(), 3u);
  EXPECT_TRUE(claim.witnesses[2].has_value());
  EXPECT_TRUE(verifyCertificate(sys, claim).valid);
}

TEST(CertificateJson, FixtureFiles) {
  const SystemDef sys = fixture::load("example1_composite");
  for (const auto& [name, valid] : std::vector<std::pair<std::string, bool>>{
           {"example1_invalid_certificate", false}, {"example1_overlapping_certificate", false}}) {
    std::ifstream in(fixture::path(name));
    const CertificateCheck check = verifyCertificate(sys, claimFromJson(json::parse(in), sys));
    EXPECT_EQ(check.valid, valid) << name;
    const json out = certificateCheckToJson(check);
    EXPECT_EQ(out.at("valid"), valid);
  }
}

TEST(CertificateJson, MalformedClaims) {
  const SystemDef sys = fixture::load("example1_composite");
  EXPECT_THROW(claimFromJson(json::parse("{}"), sys), UsageError);
  EXPECT_THROW(claimFromJson(json::parse(R"({"blocks": [{"rows": [0], "base": ["a1"]}]})"), sys), UsageError);
  EXPECT_THROW(claimFromJson(json::parse(R"({"blocks": [{"base": ["a1"]}]})"), sys), UsageError);
  EXPECT_THROW(claimFromJson(json::parse(R"({"blocks": [{"rows": [1,2,3,4,5], "base": ["a1"], "witness": "1/0"}]})"), sys),
               ParseError);
}

TEST(VerdictJson, Fields) {
  const SystemDef sys = fixture::load("uncontrollable_diag");
  const json pbh = verdictToJson(pbhCheck(sys), sys);
  EXPECT_EQ(pbh.at("method"), "pbh");
  EXPECT_EQ(pbh.at("status"), "NOT_CONTROLLABLE");
  EXPECT_EQ(parseExpr(pbh.at("minors_gcd").get<std::string>(), sys.space()), parseExpr("s - z1", sys.space()));
  const json kalman = verdictToJson(kalmanCheck(sys), sys);
  EXPECT_EQ(kalman.at("rank"), 1);
  EXPECT_FALSE(kalman.contains("certificate"));
}

}  // namespace
