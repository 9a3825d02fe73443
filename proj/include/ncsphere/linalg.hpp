#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ncsphere/errors.hpp"

namespace ncs {

/// Dense row-major matrix over an exact field K (GaussRat or ParamScalar).
template <typename K>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}
  Matrix(std::initializer_list<std::initializer_list<K>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (const auto& r : init) {
      if (r.size() != cols_) throw DomainError("ragged matrix literal");
      for (const auto& v : r) data_.push_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = K(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  K& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const K& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix select_rows(const std::vector<std::size_t>& idx) const {
    Matrix m(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(idx[i], c);
    return m;
  }

  Matrix select_cols(const std::vector<std::size_t>& idx) const {
    Matrix m(rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t j = 0; j < idx.size(); ++j) m(r, j) = (*this)(r, idx[j]);
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix dimension mismatch");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += a(i, k) * b(k, j);
      }
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      if (!(a.data_[k] == b.data_[k])) return false;
    return true;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<K> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
template <typename K>
std::vector<std::size_t> row_reduce(Matrix<K>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    K inv = K(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      K f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <typename K>
std::size_t rank(Matrix<K> m) {
  return row_reduce(m).size();
}

/// Determinant by cofactor expansion along the first row; meant for the small
/// (≤ 4×4) matrices whose entries are polynomials, where pivoting would
/// introduce denominators.
template <typename R>
R cofactor_det(const std::vector<std::vector<R>>& m) {
  std::size_t n = m.size();
  if (n == 0) return R(1);
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  R sum(0);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<R>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<R> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(std::move(row));
    }
    R t = m[0][c] * cofactor_det(minor);
    if (c % 2) sum -= t; else sum += t;
  }
  return sum;
}

/// Incrementally maintained row space in echelon form over K; sparse rows
/// keyed by column index. Used by the dimension oracles.
template <typename K>
class RowSpace {
public:
  explicit RowSpace(std::size_t cols) : pivot_row_(cols, npos) {}

  std::size_t rank() const noexcept { return rows_.size(); }

  /// Reduces `v` against the current basis; returns true if it was new.
  bool insert(std::vector<std::pair<std::size_t, K>> v) {
    reduce(v);
    if (v.empty()) return false;
    K inv = K(1) / v.front().second;
    for (auto& e : v) e.second *= inv;
    pivot_row_[v.front().first] = rows_.size();
    rows_.push_back(std::move(v));
    return true;
  }

  bool contains(std::vector<std::pair<std::size_t, K>> v) const {
    reduce(v);
    return v.empty();
  }

private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  // v is sorted by column; rows are normalised with leading entry one.
  void reduce(std::vector<std::pair<std::size_t, K>>& v) const {
    std::size_t start = 0;
    while (start < v.size()) {
      std::size_t col = v[start].first;
      std::size_t pr = pivot_row_[col];
      if (pr == npos) {
        ++start;
        continue;
      }
      K f = v[start].second;
      v = axpy(v, rows_[pr], f);
      // Entries before `start` are unchanged pivot-free columns.
      start = 0;
      while (start < v.size() && pivot_row_[v[start].first] == npos) ++start;
    }
  }

  static std::vector<std::pair<std::size_t, K>> axpy(const std::vector<std::pair<std::size_t, K>>& a,
                                                     const std::vector<std::pair<std::size_t, K>>& b,
                                                     const K& f) {
    std::vector<std::pair<std::size_t, K>> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, -(f * b[j].second));
        ++j;
      } else {
        K c = a[i].second - f * b[j].second;
        if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::vector<std::size_t> pivot_row_;
  std::vector<std::vector<std::pair<std::size_t, K>>> rows_;
};

}  // namespace ncs
