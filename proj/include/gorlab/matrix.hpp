#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gorlab/common.hpp"

namespace gorlab {

/// Dense row-major matrix over an exact field.  Carries a zero exemplar of
/// the field so empty shapes still know their scalar domain.
template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const K& exemplar)
      : rows_(rows), cols_(cols), proto_(exemplar.zero_like()), data_(rows * cols, proto_) {}

  static Matrix identity(std::size_t n, const K& exemplar) {
    Matrix m(n, n, exemplar);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = exemplar.one_like();
    return m;
  }

  static Matrix from_rows(std::size_t cols, const std::vector<std::vector<K>>& rows, const K& exemplar) {
    Matrix m(rows.size(), cols, exemplar);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      GORLAB_CHECK(rows[i].size() == cols, "row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const K& proto() const { return proto_; }

  K& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  K* row_ptr(std::size_t i) { return data_.data() + i * cols_; }
  const K* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }

  std::vector<K> row(std::size_t i) const {
    return std::vector<K>(row_ptr(i), row_ptr(i) + cols_);
  }
  std::vector<K> col(std::size_t j) const {
    std::vector<K> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
    return c;
  }
  void set_row(std::size_t i, const std::vector<K>& r) {
    GORLAB_CHECK(r.size() == cols_, "row length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = r[j];
  }
  void set_col(std::size_t j, const std::vector<K>& c) {
    GORLAB_CHECK(c.size() == rows_, "column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = c[i];
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (a.data_[i] != b.data_[i]) return false;
    return true;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, proto_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    GORLAB_CHECK(a.cols_ == b.rows_, "matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_, a.proto_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        const K* brow = b.row_ptr(k);
        K* crow = c.row_ptr(i);
        for (std::size_t j = 0; j < b.cols_; ++j) crow[j] += aik * brow[j];
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    GORLAB_CHECK(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    GORLAB_CHECK(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix difference shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
  }

  Matrix scaled(const K& s) const {
    Matrix c = *this;
    for (auto& x : c.data_) x *= s;
    return c;
  }

  std::vector<K> apply(const std::vector<K>& v) const {
    GORLAB_CHECK(v.size() == cols_, "matrix-vector shape mismatch");
    std::vector<K> r(rows_, proto_);
    for (std::size_t i = 0; i < rows_; ++i) {
      const K* rowp = row_ptr(i);
      K acc = proto_;
      for (std::size_t j = 0; j < cols_; ++j)
        if (!v[j].is_zero() && !rowp[j].is_zero()) acc += rowp[j] * v[j];
      r[i] = acc;
    }
    return r;
  }

  Matrix vstack(const Matrix& below) const {
    GORLAB_CHECK(cols_ == below.cols_, "vstack width mismatch");
    Matrix m(rows_ + below.rows_, cols_, proto_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < below.rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m.at(rows_ + i, j) = below.at(i, j);
    return m;
  }

  Matrix hstack(const Matrix& right) const {
    GORLAB_CHECK(rows_ == right.rows_, "hstack height mismatch");
    Matrix m(rows_, cols_ + right.cols_, proto_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
      for (std::size_t j = 0; j < right.cols_; ++j) m.at(i, cols_ + j) = right.at(i, j);
    }
    return m;
  }

  friend Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows_ * b.rows_, a.cols_ * b.cols_, a.proto_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) {
        if (a.at(i, j).is_zero()) continue;
        for (std::size_t k = 0; k < b.rows_; ++k)
          for (std::size_t l = 0; l < b.cols_; ++l)
            m.at(i * b.rows_ + k, j * b.cols_ + l) = a.at(i, j) * b.at(k, l);
      }
    return m;
  }

  /// In-place reduction to reduced row echelon form; returns the pivot
  /// column list (strictly increasing).
  std::vector<std::size_t> rref_inplace() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t sel = r;
      while (sel < rows_ && at(sel, c).is_zero()) ++sel;
      if (sel == rows_) continue;
      if (sel != r)
        for (std::size_t j = c; j < cols_; ++j) std::swap(at(r, j), at(sel, j));
      const K pinv = at(r, c).inv();
      {
        K* rr = row_ptr(r);
        for (std::size_t j = c; j < cols_; ++j)
          if (!rr[j].is_zero()) rr[j] *= pinv;
      }
      for (std::size_t i = r + 1; i < rows_; ++i) {
        const K f = at(i, c);
        if (f.is_zero()) continue;
        K* ri = row_ptr(i);
        const K* rr = row_ptr(r);
        ri[c] = proto_;
        for (std::size_t j = c + 1; j < cols_; ++j)
          if (!rr[j].is_zero()) ri[j] -= f * rr[j];
      }
      pivots.push_back(c);
      ++r;
    }
    // back-substitution to clear entries above pivots
    for (std::size_t k = pivots.size(); k-- > 0;) {
      const std::size_t c = pivots[k];
      const K* rk = row_ptr(k);
      for (std::size_t i = 0; i < k; ++i) {
        const K f = at(i, c);
        if (f.is_zero()) continue;
        K* ri = row_ptr(i);
        ri[c] = proto_;
        for (std::size_t j = c + 1; j < cols_; ++j)
          if (!rk[j].is_zero()) ri[j] -= f * rk[j];
      }
    }
    return pivots;
  }

  std::pair<Matrix, std::vector<std::size_t>> rref() const {
    Matrix m = *this;
    auto piv = m.rref_inplace();
    return {std::move(m), std::move(piv)};
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.rref_inplace().size();
  }

  /// Basis of the right kernel, one vector per row, in RREF.
  Matrix kernel_basis() const {
    Matrix m = *this;
    auto piv = m.rref_inplace();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : piv) is_pivot[c] = true;
    Matrix ker(cols_ - piv.size(), cols_, proto_);
    std::size_t kr = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (is_pivot[j]) continue;
      ker.at(kr, j) = proto_.one_like();
      for (std::size_t i = 0; i < piv.size(); ++i)
        ker.at(kr, piv[i]) = -m.at(i, j);
      ++kr;
    }
    ker.rref_inplace();
    return ker;
  }

  /// One solution of (*this) x = rhs if consistent.
  std::optional<std::vector<K>> solve(const std::vector<K>& rhs) const {
    GORLAB_CHECK(rhs.size() == rows_, "solve shape mismatch");
    Matrix aug(rows_, cols_ + 1, proto_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_) = rhs[i];
    }
    auto piv = aug.rref_inplace();
    if (!piv.empty() && piv.back() == cols_) return std::nullopt;
    std::vector<K> x(cols_, proto_);
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug.at(i, cols_);
    return x;
  }

  std::optional<Matrix> inverse() const {
    GORLAB_CHECK(rows_ == cols_, "inverse of non-square matrix");
    Matrix aug = hstack(identity(rows_, proto_));
    auto piv = aug.rref_inplace();
    if (piv.size() != rows_ || (rows_ > 0 && piv.back() != rows_ - 1)) return std::nullopt;
    Matrix inv(rows_, rows_, proto_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < rows_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) s += "; ";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += " ";
        s += to_string(at(i, j));
      }
    }
    return s + "]";
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  K proto_{};
  std::vector<K> data_;
};

template <class K>
std::vector<K> zero_vector(std::size_t n, const K& exemplar) {
  return std::vector<K>(n, exemplar.zero_like());
}

template <class K>
std::vector<K> unit_vector(std::size_t n, std::size_t i, const K& exemplar) {
  std::vector<K> v(n, exemplar.zero_like());
  v[i] = exemplar.one_like();
  return v;
}

template <class K>
bool is_zero_vector(const std::vector<K>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

template <class K>
std::vector<K> add(const std::vector<K>& a, const std::vector<K>& b) {
  GORLAB_CHECK(a.size() == b.size(), "vector sum shape mismatch");
  std::vector<K> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

template <class K>
std::vector<K> sub(const std::vector<K>& a, const std::vector<K>& b) {
  GORLAB_CHECK(a.size() == b.size(), "vector difference shape mismatch");
  std::vector<K> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

template <class K>
std::vector<K> scale(const std::vector<K>& a, const K& s) {
  std::vector<K> r = a;
  for (auto& x : r) x *= s;
  return r;
}

}  // namespace gorlab
