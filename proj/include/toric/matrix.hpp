#pragma once

#include <cstddef>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

// Dense rectangular matrix over Q, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rat> row(std::size_t r) const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

// Exact inverse, or Error(Singular).
QMatrix inverse(const QMatrix& m);
Rat determinant(const QMatrix& m);
std::size_t rank(const QMatrix& m);

// Greedy row basis in input order. Every row not in `basis` is the listed
// combination of basis rows: row[r] = sum_j coefficients[j] * row[basis[j]].
struct RowDependency {
  std::size_t row;
  std::vector<Rat> coefficients;
};

struct RowBasis {
  std::vector<std::size_t> basis;
  std::vector<RowDependency> dependencies;
};

RowBasis row_basis(const QMatrix& m);

}  // namespace toric
