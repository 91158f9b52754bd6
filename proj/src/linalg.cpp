#include "sctk/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "sctk/errors.hpp"
#include "sctk/poly_gcd.hpp"
#include "sctk/zero_test.hpp"

namespace sctk {
namespace {

int permutationSign(const std::vector<std::size_t>& order) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (order[i] > order[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

ClearedMatrix clearDenominators(const SymMatrix& m) {
  ClearedMatrix out;
  out.rows.reserve(m.rows());
  out.rowScale.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Polynomial scale = Polynomial::constant(m.space(), 1);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& e = m.at(r, c);
      if (e.isZero() || e.den().isOne()) continue;
      if (auto q = exactQuotient(scale, e.den()); !q) scale = lcm(scale, e.den());
    }
    std::vector<Polynomial> row;
    row.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& e = m.at(r, c);
      row.push_back(e.den().isOne() ? e.num() * scale : e.num() * divideExact(scale, e.den()));
    }
    out.rows.push_back(std::move(row));
    out.rowScale.push_back(std::move(scale));
  }
  return out;
}

Elimination bareiss(PolyMatrix m) {
  Elimination e;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  if (rows == 0 || cols == 0) return e;
  const auto& space = m.front().front().space();

  std::vector<std::size_t> live_rows(rows), live_cols(cols);
  std::iota(live_rows.begin(), live_rows.end(), 0);
  std::iota(live_cols.begin(), live_cols.end(), 0);
  Polynomial prev = Polynomial::constant(space, 1);

  while (!live_rows.empty() && !live_cols.empty()) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t ri = 0; ri < live_rows.size() && !pivot; ++ri) {
      for (std::size_t ci = 0; ci < live_cols.size(); ++ci) {
        if (!m[live_rows[ri]][live_cols[ci]].isZero()) {
          pivot = {ri, ci};
          break;
        }
      }
    }
    if (!pivot) break;
    const std::size_t pr = live_rows[pivot->first];
    const std::size_t pc = live_cols[pivot->second];
    live_rows.erase(live_rows.begin() + static_cast<std::ptrdiff_t>(pivot->first));
    live_cols.erase(live_cols.begin() + static_cast<std::ptrdiff_t>(pivot->second));

    const Polynomial& p = m[pr][pc];
    for (std::size_t i : live_rows) {
      const Polynomial factor = m[i][pc];
      for (std::size_t j : live_cols) {
        Polynomial updated = p * m[i][j];
        if (!factor.isZero() && !m[pr][j].isZero()) updated -= factor * m[pr][j];
        m[i][j] = prev.isOne() ? std::move(updated) : divideExact(updated, prev);
      }
      m[i][pc] = Polynomial(space);
    }
    prev = p;
    e.pivotRows.push_back(pr);
    e.pivotCols.push_back(pc);
    ++e.rank;
  }
  e.sign = permutationSign(e.pivotRows) * permutationSign(e.pivotCols);
  if (e.rank > 0) e.lastPivot = prev;
  return e;
}

std::size_t rank(const SymMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss(clearDenominators(m).rows).rank;
}

std::size_t rank(const SymMatrix& m, std::optional<std::uint64_t> seed) {
  if (seed && m.rows() > 0 && m.cols() > 0) {
    std::uint64_t state = *seed;
    try {
      const std::size_t numeric = rank(m.evaluate(randomPoint(m.space()->numVars(), state)));
      if (numeric == std::min(m.rows(), m.cols())) return numeric;
    } catch (const PoleError&) {
      // fall through to exact elimination
    }
  }
  return rank(m);
}

std::size_t rank(const RationalMatrix& input) {
  RationalMatrix m = input;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

RationalFunction det(const SymMatrix& m) {
  if (!m.isSquare()) throw UsageError("determinant of a non-square matrix");
  if (m.rows() == 0) return RationalFunction::constant(m.space(), 1);
  ClearedMatrix cleared = clearDenominators(m);
  Elimination e = bareiss(std::move(cleared.rows));
  if (e.rank < m.rows()) return RationalFunction(m.space());
  Polynomial scale = Polynomial::constant(m.space(), 1);
  for (const auto& f : cleared.rowScale) scale *= f;
  Polynomial top = e.sign < 0 ? -*e.lastPivot : *e.lastPivot;
  return RationalFunction(std::move(top), std::move(scale));
}

namespace {

RationalFunction laplace(const SymMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  if (row == m.rows()) return RationalFunction::constant(m.space(), 1);
  RationalFunction total(m.space());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const auto& entry = m.at(row, cols[i]);
    if (entry.isZero()) continue;
    const std::size_t col = cols[i];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(i));
    RationalFunction term = entry * laplace(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(i), col);
    if (i % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

}  // namespace

RationalFunction detCofactor(const SymMatrix& m) {
  if (!m.isSquare()) throw UsageError("determinant of a non-square matrix");
  std::vector<std::size_t> cols(m.cols());
  std::iota(cols.begin(), cols.end(), 0);
  return laplace(m, cols, 0);
}

SymMatrix buildPencil(const SymMatrix& a, const SymMatrix& b) {
  requireSameSpace(a.space(), b.space());
  if (!a.isSquare()) throw UsageError("A must be square");
  if (b.rows() != a.rows()) throw UsageError("B must have as many rows as A");
  if (a.involvesS() || b.involvesS()) {
    throw UsageError("A and B must not involve the indeterminate " + a.space()->sName());
  }
  const std::size_t n = a.rows();
  SymMatrix out(a.space(), n, n + b.cols());
  const auto s = RationalFunction::variable(a.space(), a.space()->sIndex());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out.set(r, c, r == c ? s - a.at(r, c) : -a.at(r, c));
    for (std::size_t c = 0; c < b.cols(); ++c) out.set(r, n + c, b.at(r, c));
  }
  return out;
}

SymMatrix controllabilityMatrix(const SymMatrix& a, const SymMatrix& b) {
  requireSameSpace(a.space(), b.space());
  if (!a.isSquare()) throw UsageError("A must be square");
  if (b.rows() != a.rows()) throw UsageError("B must have as many rows as A");
  const std::size_t n = a.rows();
  SymMatrix out(a.space(), n, n * b.cols());
  SymMatrix block = b;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) block = a * block;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) out.set(r, k * b.cols() + c, block.at(r, c));
    }
  }
  return out;
}

Polynomial minorsGcdInS(const SymMatrix& m, std::size_t k, std::size_t max_columns) {
  if (k > std::min(m.rows(), m.cols())) throw UsageError("minor order exceeds matrix size");
  if (m.cols() > max_columns) {
    throw LimitExceeded("minor enumeration over " + std::to_string(m.cols()) +
                        " columns exceeds the limit of " + std::to_string(max_columns));
  }
  if (k == 0) return Polynomial::constant(m.space(), 1);
  const std::size_t s = m.space()->sIndex();
  ClearedMatrix cleared = clearDenominators(m);
  for (const auto& f : cleared.rowScale) {
    if (f.involves(s)) throw UsageError("entries must be polynomial in the indeterminate");
  }
  Polynomial g(m.space());
  bool done = false;
  forEachCombination(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
    forEachCombination(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
      PolyMatrix sub(k, std::vector<Polynomial>(k, Polynomial(m.space())));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = cleared.rows[rows[i]][cols[j]];
      }
      Elimination e = bareiss(std::move(sub));
      if (e.rank < k) return true;
      g = gcdInS(g, *e.lastPivot);
      done = !g.isZero() && g.sDegree() == 0;
      return !done;
    });
    return !done;
  });
  return g;
}

}  // namespace sctk
