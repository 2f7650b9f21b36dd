#include "toric/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "toric/error.hpp"

namespace toric {

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rat>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("QMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rat> QMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("QMatrix: dimension mismatch in product");
  QMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

QMatrix inverse(const QMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::Singular, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  QMatrix a = m;
  QMatrix inv = QMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw Error(ErrorKind::Singular, "matrix is singular");
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    Rat p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      Rat f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Rat determinant(const QMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  QMatrix a = m;
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      Rat f = a(r, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

std::size_t rank(const QMatrix& m) { return row_basis(m).basis.size(); }

RowBasis row_basis(const QMatrix& m) {
  // Each accepted row is stored reduced, together with its expression in
  // terms of the original basis rows.
  struct Reduced {
    std::vector<Rat> values;
    std::size_t pivot;
    std::vector<Rat> combo;  // over basis indices
  };
  std::vector<Reduced> echelon;
  RowBasis out;

  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<Rat> v = m.row(r);
    // v = row[r] - sum combo_j * row[basis[j]]
    std::vector<Rat> combo(out.basis.size());
    for (const auto& e : echelon) {
      if (v[e.pivot] == 0) continue;
      Rat f = v[e.pivot] / e.values[e.pivot];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * e.values[j];
      for (std::size_t j = 0; j < e.combo.size(); ++j) combo[j] += f * e.combo[j];
    }
    std::size_t pivot = 0;
    while (pivot < v.size() && v[pivot] == 0) ++pivot;
    if (pivot == v.size()) {
      out.dependencies.push_back({r, std::move(combo)});
      continue;
    }
    // New basis element: reduced vector = row[r] - sum combo_j row[basis[j]].
    std::vector<Rat> own(out.basis.size() + 1);
    for (std::size_t j = 0; j < combo.size(); ++j) own[j] = -combo[j];
    own.back() = 1;
    out.basis.push_back(r);
    for (auto& e : echelon) e.combo.resize(out.basis.size());
    echelon.push_back({std::move(v), pivot, std::move(own)});
  }
  // Dependencies were recorded with combos sized at the time; pad them.
  for (auto& d : out.dependencies) d.coefficients.resize(out.basis.size());
  return out;
}

}  // namespace toric
