#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sctk/rational_function.hpp"

namespace sctk {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Dense row-major matrix over F(z)(s) whose columns carry unique labels,
/// a1..a_cols unless given explicitly.
class SymMatrix {
 public:
  SymMatrix(SpacePtr space, std::size_t rows, std::size_t cols);
  SymMatrix(SpacePtr space, std::size_t rows, std::size_t cols, std::vector<std::string> labels);

  static SymMatrix identity(SpacePtr space, std::size_t n);
  // Every row must have the same length.
  static SymMatrix fromRows(SpacePtr space, const std::vector<std::vector<RationalFunction>>& rows);
  static std::vector<std::string> defaultLabels(std::size_t cols);

  const SpacePtr& space() const { return space_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool isSquare() const { return rows_ == cols_; }

  const RationalFunction& at(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }
  void set(std::size_t r, std::size_t c, RationalFunction value);

  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> labelIndex(const std::string& label) const;
  SymMatrix withLabels(std::vector<std::string> labels) const;

  // Submatrices keep the labels of the retained columns.
  SymMatrix selectColumns(std::span<const std::size_t> cols) const;
  SymMatrix selectRows(std::span<const std::size_t> rows) const;
  SymMatrix transpose() const;

  // Horizontal concatenation relabels a1..; vertical keeps top labels.
  SymMatrix hcat(const SymMatrix& right) const;
  SymMatrix vcat(const SymMatrix& below) const;

  bool involvesS() const;
  RationalMatrix evaluate(std::span<const Rational> point) const;

  friend SymMatrix operator*(const SymMatrix& a, const SymMatrix& b);
  friend SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
  friend SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);
  // Entrywise field equality; labels are not compared.
  friend bool operator==(const SymMatrix& a, const SymMatrix& b);

 private:
  SpacePtr space_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<RationalFunction> entries_;
  std::vector<std::string> labels_;
};

}  // namespace sctk
