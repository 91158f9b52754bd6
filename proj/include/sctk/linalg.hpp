#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sctk/sym_matrix.hpp"

namespace sctk {

inline constexpr std::size_t kDefaultMaxColumns = 12;

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Polynomial copy of a matrix: row i of `rows` equals row i of the source
/// multiplied by rowScale[i], the lcm of that row's denominators. Scaling a
/// row by a nonzero element preserves rank and multiplies every minor using
/// that row by the recorded factor.
struct ClearedMatrix {
  PolyMatrix rows;
  std::vector<Polynomial> rowScale;
};

ClearedMatrix clearDenominators(const SymMatrix& m);

/// Outcome of fraction-free (Bareiss) elimination. Pivot search at each step
/// takes the lowest remaining row holding a nonzero entry in the remaining
/// columns, then the lowest such column. For a square matrix of full rank,
/// det = sign * lastPivot.
struct Elimination {
  std::size_t rank = 0;
  std::vector<std::size_t> pivotRows;
  std::vector<std::size_t> pivotCols;
  int sign = 1;
  std::optional<Polynomial> lastPivot;
};

Elimination bareiss(PolyMatrix m);

std::size_t rank(const SymMatrix& m);

// Rank with a sound fast path: if the matrix evaluated at a seeded random
// point already has full rank min(rows, cols), that is returned; otherwise
// (or on a pole) falls back to exact elimination.
std::size_t rank(const SymMatrix& m, std::optional<std::uint64_t> seed);

std::size_t rank(const RationalMatrix& m);

// Determinant via Bareiss on the denominator-cleared copy.
RationalFunction det(const SymMatrix& m);
// Determinant by Laplace expansion along the first row. Exponential; an
// independent route used to re-verify witnesses.
RationalFunction detCofactor(const SymMatrix& m);

/// [sI - A | B] with labels a1..a_{n+m}. A and B must be free of s.
SymMatrix buildPencil(const SymMatrix& a, const SymMatrix& b);

/// [B, AB, ..., A^{n-1}B].
SymMatrix controllabilityMatrix(const SymMatrix& a, const SymMatrix& b);

/// gcd in F(z)[s] of all k x k minors. Returns 1 as soon as the running gcd
/// reaches s-degree 0, and the zero polynomial iff every minor vanishes.
/// Row scale factors of the cleared matrix must be free of s. Throws
/// LimitExceeded when m has more than max_columns columns.
Polynomial minorsGcdInS(const SymMatrix& m, std::size_t k,
                        std::size_t max_columns = kDefaultMaxColumns);

// Lexicographic k-subsets of {0..n-1}; calls f(subset) until it returns false.
template <class F>
void forEachCombination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!f(static_cast<const std::vector<std::size_t>&>(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace sctk
