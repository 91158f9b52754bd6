#include "sctk/sym_matrix.hpp"

#include <set>
#include <utility>

#include "sctk/errors.hpp"

namespace sctk {

std::vector<std::string> SymMatrix::defaultLabels(std::size_t cols) {
  std::vector<std::string> out;
  out.reserve(cols);
  for (std::size_t c = 0; c < cols; ++c) out.push_back("a" + std::to_string(c + 1));
  return out;
}

SymMatrix::SymMatrix(SpacePtr space, std::size_t rows, std::size_t cols)
    : SymMatrix(std::move(space), rows, cols, defaultLabels(cols)) {}

SymMatrix::SymMatrix(SpacePtr space, std::size_t rows, std::size_t cols,
                     std::vector<std::string> labels)
    : space_(std::move(space)),
      rows_(rows),
      cols_(cols),
      entries_(rows * cols, RationalFunction(space_)),
      labels_(std::move(labels)) {
  if (labels_.size() != cols_) throw UsageError("label count must equal column count");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw UsageError("column labels must be unique");
}

SymMatrix SymMatrix::identity(SpacePtr space, std::size_t n) {
  SymMatrix m(space, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, RationalFunction::constant(space, 1));
  return m;
}

SymMatrix SymMatrix::fromRows(SpacePtr space,
                              const std::vector<std::vector<RationalFunction>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  SymMatrix m(std::move(space), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw UsageError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void SymMatrix::set(std::size_t r, std::size_t c, RationalFunction value) {
  requireSameSpace(space_, value.space());
  entries_.at(r * cols_ + c) = std::move(value);
}

std::optional<std::size_t> SymMatrix::labelIndex(const std::string& label) const {
  for (std::size_t c = 0; c < labels_.size(); ++c) {
    if (labels_[c] == label) return c;
  }
  return std::nullopt;
}

SymMatrix SymMatrix::withLabels(std::vector<std::string> labels) const {
  SymMatrix out(space_, rows_, cols_, std::move(labels));
  out.entries_ = entries_;
  return out;
}

SymMatrix SymMatrix::selectColumns(std::span<const std::size_t> cols) const {
  std::vector<std::string> labels;
  for (auto c : cols) labels.push_back(labels_.at(c));
  SymMatrix out(space_, rows_, cols.size(), std::move(labels));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < cols.size(); ++j) out.entries_[r * cols.size() + j] = at(r, cols[j]);
  }
  return out;
}

SymMatrix SymMatrix::selectRows(std::span<const std::size_t> rows) const {
  SymMatrix out(space_, rows.size(), cols_, labels_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t c = 0; c < cols_; ++c) out.entries_[i * cols_ + c] = at(rows[i], c);
  }
  return out;
}

SymMatrix SymMatrix::transpose() const {
  SymMatrix out(space_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.entries_[c * rows_ + r] = at(r, c);
  }
  return out;
}

SymMatrix SymMatrix::hcat(const SymMatrix& right) const {
  requireSameSpace(space_, right.space_);
  if (rows_ != right.rows_) throw UsageError("hcat: row counts differ");
  SymMatrix out(space_, rows_, cols_ + right.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.set(r, c, at(r, c));
    for (std::size_t c = 0; c < right.cols_; ++c) out.set(r, cols_ + c, right.at(r, c));
  }
  return out;
}

SymMatrix SymMatrix::vcat(const SymMatrix& below) const {
  requireSameSpace(space_, below.space_);
  if (cols_ != below.cols_) throw UsageError("vcat: column counts differ");
  SymMatrix out(space_, rows_ + below.rows_, cols_, labels_);
  std::copy(entries_.begin(), entries_.end(), out.entries_.begin());
  std::copy(below.entries_.begin(), below.entries_.end(),
            out.entries_.begin() + static_cast<std::ptrdiff_t>(entries_.size()));
  return out;
}

bool SymMatrix::involvesS() const {
  const std::size_t s = space_->sIndex();
  for (const auto& e : entries_) {
    if (e.num().involves(s) || e.den().involves(s)) return true;
  }
  return false;
}

RationalMatrix SymMatrix::evaluate(std::span<const Rational> point) const {
  RationalMatrix out(rows_, std::vector<Rational>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = at(r, c).evaluate(point);
  }
  return out;
}

SymMatrix operator*(const SymMatrix& a, const SymMatrix& b) {
  requireSameSpace(a.space_, b.space_);
  if (a.cols_ != b.rows_) throw UsageError("matrix product: inner dimensions differ");
  SymMatrix out(a.space_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      RationalFunction acc(a.space_);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& x = a.at(i, k);
        const auto& y = b.at(k, j);
        if (!x.isZero() && !y.isZero()) acc += x * y;
      }
      out.entries_[i * b.cols_ + j] = std::move(acc);
    }
  }
  return out;
}

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
  requireSameSpace(a.space_, b.space_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw UsageError("matrix sum: shapes differ");
  SymMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
  requireSameSpace(a.space_, b.space_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw UsageError("matrix difference: shapes differ");
  SymMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

bool operator==(const SymMatrix& a, const SymMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !sameSpace(a.space_, b.space_)) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (!(a.entries_[i] == b.entries_[i])) return false;
  }
  return true;
}

}  // namespace sctk
