#pragma once

#include <string>
#include <utility>
#include <vector>

#include "a1deg/error.hpp"
#include "a1deg/field.hpp"

namespace a1deg {

/// Dense row-major matrix over an exact field.
template <ExactField K>
class Matrix {
 public:
  using value_type = typename K::value_type;

  Matrix(K field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  Matrix(K field, const std::vector<std::vector<value_type>>& rows) : Matrix(field, rows.size(), rows.empty() ? 0 : rows[0].size()) {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (rows[i].size() != cols_) fail(ErrorKind::DimensionMismatch, "ragged matrix rows");
      for (std::size_t j = 0; j < cols_; ++j) at(i, j) = rows[i][j];
    }
  }

  static Matrix identity(const K& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }

  const K& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  value_type& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorKind::DimensionMismatch, "matrix product shape");
    const K& k = a.field_;
    Matrix c(k, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        if (k.is_zero(a.at(i, l))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!k.is_zero(b.at(l, j))) c.at(i, j) = k.add(c.at(i, j), k.mul(a.at(i, l), b.at(l, j)));
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!a.field_.equal(a.data_[i], b.data_[i])) return false;
    return true;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!field_.equal(at(i, j), at(j, i))) return false;
    return true;
  }

  value_type determinant() const {
    if (rows_ != cols_) fail(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    const K& k = field_;
    Matrix a = *this;
    value_type det = k.one();
    for (std::size_t c = 0; c < rows_; ++c) {
      std::size_t p = c;
      while (p < rows_ && k.is_zero(a.at(p, c))) ++p;
      if (p == rows_) return k.zero();
      if (p != c) {
        a.swap_rows(p, c);
        det = k.neg(det);
      }
      det = k.mul(det, a.at(c, c));
      auto inv = k.inv(a.at(c, c));
      for (std::size_t r = c + 1; r < rows_; ++r) {
        if (k.is_zero(a.at(r, c))) continue;
        auto factor = k.mul(a.at(r, c), inv);
        for (std::size_t j = c; j < cols_; ++j) a.at(r, j) = k.sub(a.at(r, j), k.mul(factor, a.at(c, j)));
      }
    }
    return det;
  }

  Matrix inverse() const {
    if (rows_ != cols_) fail(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
    const K& k = field_;
    const std::size_t n = rows_;
    Matrix a = *this, inv = identity(k, n);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && k.is_zero(a.at(p, c))) ++p;
      if (p == n) fail(ErrorKind::NonInvertibleMatrix, "matrix is singular");
      a.swap_rows(p, c);
      inv.swap_rows(p, c);
      auto s = k.inv(a.at(c, c));
      for (std::size_t j = 0; j < n; ++j) {
        a.at(c, j) = k.mul(a.at(c, j), s);
        inv.at(c, j) = k.mul(inv.at(c, j), s);
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || k.is_zero(a.at(r, c))) continue;
        auto f = a.at(r, c);
        for (std::size_t j = 0; j < n; ++j) {
          a.at(r, j) = k.sub(a.at(r, j), k.mul(f, a.at(c, j)));
          inv.at(r, j) = k.sub(inv.at(r, j), k.mul(f, inv.at(c, j)));
        }
      }
    }
    return inv;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      s += "[";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + field_.format(at(i, j));
      s += "]\n";
    }
    return s;
  }

 private:
  K field_;
  std::size_t rows_, cols_;
  std::vector<value_type> data_;
};

/// Sparse square matrix stored as a list of nonzero entries.
template <ExactField K>
struct SparseMatrix {
  struct Entry {
    std::size_t row, col;
    typename K::value_type value;
  };
  std::size_t size = 0;
  std::vector<Entry> entries;

  static SparseMatrix from_dense(const Matrix<K>& m) {
    SparseMatrix s;
    s.size = m.rows();
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m.field().is_zero(m.at(i, j))) s.entries.push_back({i, j, m.at(i, j)});
    return s;
  }
};

/// S * C.
template <ExactField K>
Matrix<K> left_multiply(const SparseMatrix<K>& s, const Matrix<K>& c) {
  const K& k = c.field();
  Matrix<K> out(k, s.size, c.cols());
  for (const auto& e : s.entries)
    for (std::size_t j = 0; j < c.cols(); ++j)
      if (!k.is_zero(c.at(e.col, j))) out.at(e.row, j) = k.add(out.at(e.row, j), k.mul(e.value, c.at(e.col, j)));
  return out;
}

/// C * S^T.
template <ExactField K>
Matrix<K> right_multiply_transpose(const Matrix<K>& c, const SparseMatrix<K>& s) {
  const K& k = c.field();
  Matrix<K> out(k, c.rows(), s.size);
  for (const auto& e : s.entries)
    for (std::size_t i = 0; i < c.rows(); ++i)
      if (!k.is_zero(c.at(i, e.col))) out.at(i, e.row) = k.add(out.at(i, e.row), k.mul(e.value, c.at(i, e.col)));
  return out;
}

}  // namespace a1deg
