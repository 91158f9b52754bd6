#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sctk/errors.hpp"
#include "sctk/poly_gcd.hpp"

namespace {

using namespace sctk;
using oracle::ex;
using oracle::Gen;
using oracle::matrix;

std::vector<std::vector<std::string>> baseLabels(const Verdict& v) {
  std::vector<std::vector<std::string>> out;
  if (!v.certificate) return out;
  for (const auto& b : v.certificate->bases) out.push_back(b.base.labels);
  return out;
}

SystemDef scalarCopy(const SpacePtr& space, const std::string& name) {
  return SystemDef(name, matrix(space, {{"z1"}}), matrix(space, {{"1"}}));
}

TEST(SystemDef, Validation) {
  const auto space = ParamSpace::make({"z1"});
  EXPECT_THROW(SystemDef("x", SymMatrix(space, 2, 3), SymMatrix(space, 2, 1)), UsageError);
  EXPECT_THROW(SystemDef("x", SymMatrix(space, 0, 0), SymMatrix(space, 0, 1)), UsageError);
  EXPECT_THROW(SystemDef("x", SymMatrix(space, 2, 2), SymMatrix(space, 3, 1)), UsageError);
  EXPECT_THROW(SystemDef("x", matrix(space, {{"s"}}), matrix(space, {{"1"}})), UsageError);
  EXPECT_NO_THROW(SystemDef("x", SymMatrix(space, 2, 2), SymMatrix(space, 2, 0)));
}

TEST(RowPartition, ParseAndValidate) {
  const RowPartition p = RowPartition::parse("1,2;3,4,5", 5);
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.blocks()[1], (std::vector<std::size_t>{2, 3, 4}));
  EXPECT_EQ(p.toString(), "1,2;3,4,5");
  EXPECT_EQ(RowPartition::parse(" 2 ; 1 ", 2).toString(), "2;1");
  EXPECT_EQ(RowPartition::singletons(3).toString(), "1;2;3");
  EXPECT_EQ(RowPartition::consecutive({2, 1}).toString(), "1,2;3");
  EXPECT_THROW(RowPartition::parse("1,2;3", 4), UsageError);
  EXPECT_THROW(RowPartition::parse("1,2;2,3", 3), UsageError);
  EXPECT_THROW(RowPartition::parse("0;1", 2), UsageError);
  EXPECT_THROW(RowPartition::parse("1;;2", 2), UsageError);
  EXPECT_THROW(RowPartition::parse("1;x", 2), UsageError);
  EXPECT_THROW(RowPartition({{0}, {}}, 1), UsageError);
}

TEST(Controllability, ExampleOneSubsystems) {
  const SystemDef s1 = fixture::load("example1_sigma1");
  const SystemDef s2 = fixture::load("example1_sigma2");
  const Verdict k1 = kalmanCheck(s1);
  const Verdict k2 = kalmanCheck(s2);
  EXPECT_EQ(k1.status, Status::kControllable);
  EXPECT_EQ(k1.rank, 2u);
  EXPECT_EQ(k2.status, Status::kControllable);
  EXPECT_EQ(k2.rank, 3u);
  EXPECT_EQ(pbhCheck(s1).status, Status::kControllable);
  EXPECT_EQ(pbhCheck(s2).status, Status::kControllable);
}

TEST(Controllability, ExampleOneComposite) {
  const SystemDef sys = fixture::load("example1_composite");
  const Verdict pbh = pbhCheck(sys);
  EXPECT_EQ(pbh.status, Status::kControllable);
  ASSERT_TRUE(pbh.minorsGcd.has_value());
  EXPECT_TRUE(pbh.minorsGcd->isOne());
  EXPECT_EQ(kalmanCheck(sys).status, Status::kControllable);
  const Verdict cert = certificateSearch(sys, RowPartition::parse("1,2;3,4,5", 5));
  EXPECT_EQ(cert.status, Status::kCertified);
  EXPECT_EQ(baseLabels(cert), (std::vector<std::vector<std::string>>{{"a2", "a6"}, {"a3", "a4", "a7"}}));
  EXPECT_EQ(cert.certificate->sizes(), (std::vector<std::size_t>{2, 3}));
  EXPECT_TRUE(verifyCertificate(sys, *cert.certificate).valid);
}

TEST(Controllability, ComposeReproducesExampleOne) {
  const auto space = ParamSpace::make({"z1", "z2", "z3"});
  const SystemDef s1 = toSystem(readSystemFile(fixture::path("example1_sigma1")), "s1", space);
  const SystemDef s2 = toSystem(readSystemFile(fixture::path("example1_sigma2")), "s2", space);
  const SystemDef whole = toSystem(readSystemFile(fixture::path("example1_composite")), "c", space);
  const std::vector<SystemDef> parts{s1, s2};
  const SystemDef composed = composeParallel(parts);
  EXPECT_EQ(composed.A(), whole.A());
  EXPECT_EQ(composed.B(), whole.B());
  EXPECT_EQ(composed.name(), "parallel(example1_sigma1,example1_sigma2)");
  const Verdict v = compositeCertificateCheck(parts);
  EXPECT_EQ(v.method, Method::kComposite);
  EXPECT_EQ(v.status, Status::kCertified);
}

TEST(Controllability, ComposeRejectsMismatchedInputs) {
  const auto space = ParamSpace::make({"z1"});
  const std::vector<SystemDef> parts{scalarCopy(space, "a"),
                                     SystemDef("b", matrix(space, {{"1"}}), matrix(space, {{"1", "0"}}))};
  try {
    composeParallel(parts);
    FAIL() << "mismatched m accepted";
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("m = 1"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("m = 2"), std::string::npos);
  }
  const std::vector<SystemDef> other{scalarCopy(space, "a"), scalarCopy(ParamSpace::make({"z1", "z2"}), "b")};
  EXPECT_THROW(composeParallel(other), UsageError);
  EXPECT_THROW(composeParallel(std::span<const SystemDef>{}), UsageError);
}

TEST(Controllability, Pendulum) {
  const SystemDef sys = fixture::load("example2_pendulum");
  const Verdict v = certificateSearch(sys, RowPartition::parse("1,2;3,4;5,6", 6));
  ASSERT_EQ(v.status, Status::kCertified);
  EXPECT_EQ(baseLabels(v), (std::vector<std::vector<std::string>>{{"a4", "a5"}, {"a6", "a7"}, {"a2", "a3"}}));
  EXPECT_EQ(v.certificate->bases[2].witness, ex(fixture::kPendulumWitness, sys.space()));
  EXPECT_EQ(pbhCheck(sys).status, Status::kControllable);
  EXPECT_EQ(kalmanCheck(sys).status, Status::kControllable);
}

TEST(Controllability, BridgeIsGenericallyControllableButNotWhenBalanced) {
  const SystemDef sys = fixture::load("bridge");
  EXPECT_EQ(kalmanCheck(sys).status, Status::kControllable);
  const SymMatrix k = controllabilityMatrix(sys.A(), sys.B());
  // Variables: L, C, R1, R2, R3, R4, s.
  const std::vector<Rational> balanced{1, 1, 1, 1, 1, 1, 0};
  const std::vector<Rational> unbalanced{1, 1, 1, 2, 1, 1, 0};
  EXPECT_EQ(rank(k.evaluate(balanced)), 1u);
  EXPECT_EQ(rank(k.evaluate(unbalanced)), 2u);
  EXPECT_EQ(k.evaluate(unbalanced)[1][1], Rational(1, 6));
  // The (2,2) entry vanishes exactly on R1 R4 = R2 R3.
  EXPECT_EQ(k.at(1, 1), ex("(R2/(R1+R2) - R4/(R3+R4))/(L*C)", sys.space()));
}

TEST(Controllability, UncontrollableDiagonal) {
  const SystemDef sys = fixture::load("uncontrollable_diag");
  const Verdict pbh = pbhCheck(sys);
  EXPECT_EQ(pbh.status, Status::kNotControllable);
  ASSERT_TRUE(pbh.minorsGcd.has_value());
  EXPECT_EQ(*pbh.minorsGcd, ex("s - z1", sys.space()).num());
  EXPECT_EQ(kalmanCheck(sys).status, Status::kNotControllable);
  EXPECT_EQ(certificateSearch(sys, RowPartition::singletons(2)).status, Status::kInconclusive);
}

TEST(Controllability, TwoParallelScalarCopies) {
  const auto space = ParamSpace::make({"z1"});
  const std::vector<SystemDef> parts{scalarCopy(space, "x1"), scalarCopy(space, "x2")};
  const SystemDef sys = composeParallel(parts);
  const Verdict pbh = pbhCheck(sys);
  EXPECT_EQ(pbh.status, Status::kNotControllable);
  ASSERT_TRUE(pbh.minorsGcd.has_value());
  EXPECT_TRUE(exactQuotient(*pbh.minorsGcd, ex("s - z1", space).num()).has_value());
  EXPECT_EQ(certificateSearch(sys, RowPartition::consecutive({1, 1})).status, Status::kInconclusive);
  EXPECT_EQ(certificateSearch(sys, RowPartition::consecutive({2})).status, Status::kInconclusive);
  EXPECT_EQ(compositeCertificateCheck(parts).status, Status::kInconclusive);
}

TEST(Controllability, NoInputs) {
  const SystemDef sys = fixture::load("no_inputs");
  EXPECT_EQ(pbhCheck(sys).status, Status::kNotControllable);
  EXPECT_EQ(kalmanCheck(sys).status, Status::kNotControllable);
  EXPECT_EQ(kalmanCheck(sys).rank, 0u);
}

TEST(Controllability, ColumnLimitGivesInconclusivePbh) {
  const SystemDef sys = fixture::load("example1_composite");
  CheckOptions opts;
  opts.maxColumns = 6;
  EXPECT_EQ(pbhCheck(sys, opts).status, Status::kInconclusive);
}

TEST(Controllability, CompositeWithFailingSubsystem) {
  const SystemDef bad = fixture::load("uncontrollable_diag");
  const SystemDef good("good", matrix(bad.space(), {{"1"}}), matrix(bad.space(), {{"1"}}));
  const std::vector<SystemDef> parts{good, bad};
  const Verdict v = compositeCertificateCheck(parts);
  EXPECT_EQ(v.status, Status::kInconclusive);
  EXPECT_NE(v.detail.find("subsystem 2"), std::string::npos);
}

TEST(Controllability, DisjointBlockBasesAloneDoNotCertify) {
  // Each row has a constant entry, so singleton blocks pick {a2} and {a1}
  // disjointly, yet with B = 0 the pencil loses rank at the eigenvalues.
  const auto space = ParamSpace::make({"z2"});
  const SystemDef sys("free", matrix(space, {{"0", "-2"}, {"z2", "0"}}), SymMatrix(space, 2, 0));
  const Verdict v = certificateSearch(sys, RowPartition::singletons(2));
  EXPECT_EQ(v.status, Status::kInconclusive);
  EXPECT_NE(v.detail.find("s^2 + 2*z2"), std::string::npos) << v.detail;
  EXPECT_EQ(pbhCheck(sys).status, Status::kNotControllable);

  const CertificateCheck check =
      verifyCertificate(sys, CertificateClaim{RowPartition::singletons(2), {{"a2"}, {"a1"}}, {}});
  EXPECT_FALSE(check.valid);
  EXPECT_TRUE(check.blocks[0].failures.empty());
  EXPECT_TRUE(check.blocks[1].failures.empty());
  ASSERT_EQ(check.failures.size(), 1u);
  EXPECT_NE(check.failures[0].find("union witness"), std::string::npos);

  // Same with inputs: parallel B columns give disjoint singletons.
  const auto one = ParamSpace::make({"z1"});
  const SystemDef twin("twin", matrix(one, {{"z1", "0"}, {"0", "z1"}}), matrix(one, {{"1", "1"}, {"1", "1"}}));
  EXPECT_EQ(certificateSearch(twin, RowPartition::singletons(2)).status, Status::kInconclusive);
  EXPECT_EQ(pbhCheck(twin).status, Status::kNotControllable);
}

TEST(Controllability, UnionWitness) {
  const SystemDef ex1 = fixture::load("example1_composite");
  const Verdict v = certificateSearch(ex1, RowPartition::parse("1,2;3,4,5", 5));
  ASSERT_TRUE(v.certificate.has_value());
  EXPECT_FALSE(v.certificate->unionUnimodular);
  EXPECT_EQ(*v.certificate->unionWitness, ex("z1*s - z3", ex1.space()));

  const auto space = ParamSpace::make({"z1"});
  const Verdict scalar = certificateSearch(scalarCopy(space, "x"), RowPartition::singletons(1));
  ASSERT_TRUE(scalar.certificate.has_value());
  EXPECT_TRUE(scalar.certificate->unionUnimodular);
  EXPECT_EQ(*scalar.certificate->unionWitness, ex("1", space));
}

TEST(Verifier, InvalidExampleOneCertificateFails) {
  const SystemDef sys = fixture::load("example1_composite");
  const CertificateClaim claim{RowPartition::parse("1,2;3,4,5", 5), {{"a2", "a6"}, {"a3", "a5", "a7"}}, {}};
  const CertificateCheck check = verifyCertificate(sys, claim);
  EXPECT_FALSE(check.valid);
  ASSERT_EQ(check.blocks.size(), 2u);
  EXPECT_TRUE(check.blocks[0].failures.empty());
  EXPECT_EQ(*check.blocks[0].witness, ex("-z3", sys.space()));
  EXPECT_EQ(*check.blocks[1].witness, ex("-s^2 + s", sys.space()));
  EXPECT_FALSE(check.blocks[1].failures.empty());
}

TEST(Verifier, DetectsEachBrokenClause) {
  const SystemDef sys = fixture::load("example1_composite");
  const auto part = RowPartition::parse("1,2;3,4,5", 5);
  const auto space = sys.space();
  // Overlap.
  EXPECT_FALSE(verifyCertificate(sys, CertificateClaim{part, {{"a2", "a7"}, {"a3", "a4", "a7"}}, {}}).valid);
  // Dependent columns.
  EXPECT_FALSE(verifyCertificate(sys, CertificateClaim{part, {{"a6", "a7"}, {"a3", "a4", "a5"}}, {}}).valid);
  // Wrong size.
  EXPECT_FALSE(verifyCertificate(sys, CertificateClaim{part, {{"a2"}, {"a3", "a4", "a7"}}, {}}).valid);
  // Claimed witness disagrees with the recomputed one.
  const CertificateClaim lying{part, {{"a2", "a6"}, {"a3", "a4", "a7"}},
                               {ex("z3", space), ex("1", space)}};
  EXPECT_FALSE(verifyCertificate(sys, lying).valid);
  const CertificateClaim honest{part, {{"a2", "a6"}, {"a3", "a4", "a7"}},
                                {ex("-z3", space), ex("1", space)}};
  EXPECT_TRUE(verifyCertificate(sys, honest).valid);
  // Shape problems are usage errors.
  EXPECT_THROW(verifyCertificate(sys, CertificateClaim{part, {{"a2", "a6"}}, {}}), UsageError);
  EXPECT_THROW(verifyCertificate(sys, CertificateClaim{part, {{"a2", "a6"}, {"a3", "a4", "a99"}}, {}}), UsageError);
  EXPECT_THROW(verifyCertificate(sys, CertificateClaim{RowPartition::singletons(2), {{"a2"}, {"a1"}}, {}}), UsageError);
}

TEST(Properties, RandomSystemsSoundAndConsistent) {
  const auto space = ParamSpace::make({"z1", "z2"});
  Gen gen(61);
  for (int i = 0; i < 80; ++i) {
    const SystemDef sys = fixture::randomSystem(gen, space, 3, 2, i);
    const Verdict pbh = pbhCheck(sys);
    const Verdict kalman = kalmanCheck(sys);
    const Verdict cert = certificateSearch(sys, fixture::randomPartition(gen, sys.n()));
    ASSERT_NE(pbh.status, Status::kInconclusive);
    EXPECT_EQ(pbh.status, kalman.status) << render(sys.A().at(0, 0));
    EXPECT_NE(cert.status, Status::kNotControllable);
    if (cert.status == Status::kCertified) {
      EXPECT_EQ(pbh.status, Status::kControllable)
          << toJson(toSystemFile(sys)).dump() << "\n" << certificateToJson(*cert.certificate, sys).dump()
          << "\n" << pbh.detail;
      EXPECT_TRUE(verifyCertificate(sys, *cert.certificate).valid);
    }
    // Generic rank is attained at a random point with overwhelming probability.
    const std::size_t numeric = oracle::numericKalmanRank(sys.A(), sys.B(), gen.point(space->numVars()));
    EXPECT_EQ(numeric == sys.n(), kalman.status == Status::kControllable);
  }
}

TEST(Properties, CoordinateScalingPreservesVerdicts) {
  const auto space = ParamSpace::make({"z1", "z2"});
  Gen gen(62);
  for (int i = 0; i < 30; ++i) {
    const SystemDef sys = fixture::randomSystem(gen, space, 3, 2, i);
    const std::size_t n = sys.n();
    SymMatrix t(space, n, n), tinv(space, n, n);
    for (std::size_t k = 0; k < n; ++k) {
      const RationalFunction d = ex(k % 2 == 0 ? "z1 + 2" : "-3", space);
      t.set(k, k, d);
      tinv.set(k, k, RationalFunction::constant(space, 1) / d);
    }
    const SystemDef scaled("scaled", t * sys.A() * tinv, t * sys.B());
    EXPECT_EQ(pbhCheck(scaled).status, pbhCheck(sys).status);
    EXPECT_EQ(kalmanCheck(scaled).status, kalmanCheck(sys).status);
    const RowPartition part = RowPartition::singletons(n);
    EXPECT_EQ(certificateSearch(scaled, part).status, certificateSearch(sys, part).status);
  }
}

TEST(Properties, SeededFastPathAgrees) {
  const auto space = ParamSpace::make({"z1", "z2"});
  Gen gen(63);
  CheckOptions seeded;
  seeded.seed = 12345;
  for (int i = 0; i < 30; ++i) {
    const SystemDef sys = fixture::randomSystem(gen, space, 3, 2, i);
    EXPECT_EQ(pbhCheck(sys, seeded).status, pbhCheck(sys).status);
    EXPECT_EQ(kalmanCheck(sys, seeded).status, kalmanCheck(sys).status);
  }
}

}  // namespace
