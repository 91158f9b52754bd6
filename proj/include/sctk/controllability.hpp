#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sctk/linalg.hpp"
#include "sctk/matroid.hpp"

namespace sctk {

/// x' = A x + B u over F(z). A is n x n with n >= 1, B is n x m (m may be
/// zero), and neither involves the indeterminate.
class SystemDef {
 public:
  SystemDef(std::string name, SymMatrix a, SymMatrix b);

  const std::string& name() const { return name_; }
  const SpacePtr& space() const { return a_.space(); }
  const SymMatrix& A() const { return a_; }
  const SymMatrix& B() const { return b_; }
  std::size_t n() const { return a_.rows(); }
  std::size_t m() const { return b_.cols(); }

  SymMatrix pencil() const { return buildPencil(a_, b_); }

 private:
  std::string name_;
  SymMatrix a_;
  SymMatrix b_;
};

/// Ordered, disjoint, covering blocks of 0-based row indices.
class RowPartition {
 public:
  // Throws UsageError unless the blocks partition {0..n-1} into nonempty sets.
  RowPartition(std::vector<std::vector<std::size_t>> blocks, std::size_t n);

  static RowPartition singletons(std::size_t n);
  // 1-based rows, ',' within a block and ';' between blocks: "1,2;3,4,5".
  static RowPartition parse(std::string_view text, std::size_t n);
  // Consecutive blocks of the given sizes.
  static RowPartition consecutive(const std::vector<std::size_t>& sizes);

  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  std::size_t n() const { return n_; }
  std::string toString() const;

 private:
  std::vector<std::vector<std::size_t>> blocks_;
  std::size_t n_;
};

/// Row partition of [sI - A | B] with one unimodular base per block, the
/// bases pairwise disjoint with sizes summing to n.
///
/// Disjointness alone does not pin the rank of the whole pencil: entries of
/// one block's rows in another block's base columns can make the n x n
/// determinant on the union vanish at some s. The union is therefore checked
/// too. Either its determinant is itself a unit, or rank n for every s is
/// confirmed by the maximal minors of the pencil having gcd 1.
struct Certificate {
  RowPartition partition;
  std::vector<UnimodularBase> bases;
  // Determinant of the pencil on the union of the bases (columns ascending).
  std::optional<RationalFunction> unionWitness;
  bool unionUnimodular = false;

  std::vector<std::size_t> sizes() const;
};

enum class Status { kControllable, kNotControllable, kCertified, kInconclusive };
enum class Method { kPbh, kKalman, kMatroid, kComposite };

std::string_view toString(Status s);
std::string_view toString(Method m);

/// kNotControllable only ever comes from the exact tests (PBH, Kalman);
/// certificate searches report kCertified or kInconclusive.
struct Verdict {
  Status status = Status::kInconclusive;
  Method method = Method::kPbh;
  std::string detail;
  std::optional<Certificate> certificate;
  // PBH: gcd in F(z)[s] of the maximal minors of the pencil.
  std::optional<Polynomial> minorsGcd;
  std::optional<std::size_t> rank;
};

struct CheckOptions {
  std::size_t maxColumns = kDefaultMaxColumns;
  std::size_t maxBases = kDefaultMaxBases;
  // Enables the randomized full-rank fast path in rank computations.
  std::optional<std::uint64_t> seed;
};

// rank [sI - A | B] = n over F(z)(s) and the maximal minors have no common
// factor involving s.
Verdict pbhCheck(const SystemDef& sys, const CheckOptions& opts = {});

// rank [B, AB, ..., A^{n-1}B] = n over F(z).
Verdict kalmanCheck(const SystemDef& sys, const CheckOptions& opts = {});

// Disjoint unimodular bases over the row blocks of [sI - A | B].
Verdict certificateSearch(const SystemDef& sys, const RowPartition& partition,
                          const CheckOptions& opts = {});

/// Block-diagonal A and vertically stacked B over the shared input.
SystemDef composeParallel(std::span<const SystemDef> subsystems);

/// Requires every subsystem to pass pbhCheck, then searches the composite
/// pencil with one block per subsystem.
Verdict compositeCertificateCheck(std::span<const SystemDef> subsystems,
                                  const CheckOptions& opts = {});

/// A certificate as read from a file: labels per block and optionally the
/// claimed determinant witness of each block.
struct CertificateClaim {
  RowPartition partition;
  std::vector<std::vector<std::string>> bases;
  std::vector<std::optional<RationalFunction>> witnesses;
};

CertificateClaim toClaim(const Certificate& cert);

struct BlockCheck {
  std::vector<std::string> labels;
  std::optional<RationalFunction> witness;  // recomputed
  std::vector<std::string> failures;
};

struct CertificateCheck {
  bool valid = false;
  std::vector<BlockCheck> blocks;
  std::optional<RationalFunction> unionWitness;  // recomputed
  std::vector<std::string> failures;  // certificate-wide clauses

  explicit operator bool() const { return valid; }
};

/// Recomputes every witness by cofactor expansion and checks: each block's
/// base is square with a nonzero s-free determinant (matching the claimed
/// witness when one is given), bases are pairwise disjoint, block sizes sum
/// to n, and the union either has a unit determinant or the pencil's
/// maximal minors have gcd 1. Shape mismatches (partition of the wrong size,
/// unknown labels, base count differing from block count) throw UsageError.
CertificateCheck verifyCertificate(const SystemDef& sys, const CertificateClaim& claim);
CertificateCheck verifyCertificate(const SystemDef& sys, const Certificate& cert);

}  // namespace sctk
