#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sctk/sym_matrix.hpp"

namespace sctk {

inline constexpr std::size_t kDefaultMaxBases = 10000;
// Exhaustive subset evaluation of the union rank formula stops here.
inline constexpr std::size_t kMaxUnionFormulaSubset = 20;

/// Subset of a matroid's ground set, as a bitmask over column indices.
class ColumnSet {
 public:
  static constexpr std::size_t kMaxColumns = 64;

  constexpr ColumnSet() = default;
  constexpr explicit ColumnSet(std::uint64_t bits) : bits_(bits) {}
  static ColumnSet of(const std::vector<std::size_t>& cols);
  static ColumnSet all(std::size_t n);

  std::uint64_t bits() const { return bits_; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const { return bits_ == 0; }
  bool contains(std::size_t c) const { return (bits_ >> c) & 1U; }
  bool isSubsetOf(ColumnSet other) const { return (bits_ & ~other.bits_) == 0; }
  bool intersects(ColumnSet other) const { return (bits_ & other.bits_) != 0; }
  std::vector<std::size_t> indices() const;

  ColumnSet operator|(ColumnSet o) const { return ColumnSet(bits_ | o.bits_); }
  ColumnSet operator&(ColumnSet o) const { return ColumnSet(bits_ & o.bits_); }
  ColumnSet operator-(ColumnSet o) const { return ColumnSet(bits_ & ~o.bits_); }
  friend bool operator==(ColumnSet, ColumnSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// M[A]: the vector matroid on the column labels of A over F(z)(s). Ranks
/// of column subsets are memoized; the memo is shared by copies and guarded
/// for concurrent readers.
class VectorMatroid {
 public:
  explicit VectorMatroid(SymMatrix matrix);

  const SymMatrix& matrix() const { return matrix_; }
  const std::vector<std::string>& ground() const { return matrix_.labels(); }
  std::size_t groundSize() const { return matrix_.cols(); }

  // Throws UsageError on a label outside the ground set.
  ColumnSet resolve(const std::vector<std::string>& labels) const;
  std::vector<std::string> labelsOf(ColumnSet set) const;

  std::size_t rankOf(ColumnSet set) const;
  std::size_t rankOf(const std::vector<std::string>& labels) const { return rankOf(resolve(labels)); }
  std::size_t rank() const { return rankOf(ColumnSet::all(groundSize())); }

  bool isIndependent(ColumnSet set) const { return rankOf(set) == set.size(); }
  bool isIndependent(const std::vector<std::string>& labels) const {
    return isIndependent(resolve(labels));
  }

 private:
  struct RankCache;
  SymMatrix matrix_;
  std::shared_ptr<RankCache> cache_;
};

struct Base {
  ColumnSet columns;
  std::vector<std::string> labels;
};

/// A base whose square column submatrix has a determinant that is a unit of
/// F(z)[s]: nonzero and free of s.
struct UnimodularBase {
  Base base;
  RationalFunction witness;
};

struct BaseList {
  std::vector<Base> bases;
  bool truncated = false;
};

struct UnimodularBaseList {
  std::vector<UnimodularBase> bases;
  bool truncated = false;
};

// All bases, lexicographic in ground order, at most `cap` of them.
BaseList enumerateBases(const VectorMatroid& m, std::size_t cap = kDefaultMaxBases);

// Empty unless the matrix row count equals the matroid rank (only then are
// the base submatrices square).
UnimodularBaseList enumerateUnimodularBases(const VectorMatroid& m,
                                            std::size_t cap = kDefaultMaxBases);

/// min over Y subset of X of sum_i r_i(Y) + |X - Y|. Ground sets must agree.
/// Throws LimitExceeded for |X| > kMaxUnionFormulaSubset.
std::size_t unionRankFormula(const std::vector<VectorMatroid>& matroids, ColumnSet x);

struct DisjointBases {
  std::optional<std::vector<Base>> family;
  bool truncated = false;
};

/// First pairwise-disjoint family (B_1..B_k) with |B_i| = sizes_wanted[i],
/// found by backtracking over each matroid's bases in lexicographic order,
/// matroids in index order.
DisjointBases maxUnionOfBases(const std::vector<VectorMatroid>& matroids,
                              const std::vector<std::size_t>& sizes_wanted,
                              std::size_t cap = kDefaultMaxBases);

/// max |B_1 u ... u B_k| over all base tuples: the rank of the union matroid
/// read off its bases. Exhaustive over enumerated bases.
std::size_t largestBaseUnion(const std::vector<VectorMatroid>& matroids,
                             std::size_t cap = kDefaultMaxBases);

// Backtracking core shared with the certificate search: picks one candidate
// per list so that the picks are pairwise disjoint. Returns the chosen
// indices, first found in lexicographic order. With `accept`, complete
// selections it rejects are skipped and the search continues.
std::optional<std::vector<std::size_t>> findDisjointSelection(
    const std::vector<std::vector<ColumnSet>>& candidates);
std::optional<std::vector<std::size_t>> findDisjointSelection(
    const std::vector<std::vector<ColumnSet>>& candidates,
    const std::function<bool(const std::vector<std::size_t>&)>& accept);

void requireCommonGround(const std::vector<VectorMatroid>& matroids);

}  // namespace sctk
