#pragma once

#include <optional>
#include <vector>

#include "gorlab/matrix.hpp"

namespace gorlab {

/// Linear subspace of K^n, stored as an RREF basis (one vector per row,
/// strictly increasing pivots, no zero rows).  The representation is
/// canonical: two subspaces are equal iff their basis matrices are equal.
template <class K>
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient, const K& exemplar) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix<K>(0, ambient, exemplar);
    return s;
  }

  static Subspace full(std::size_t ambient, const K& exemplar) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix<K>::identity(ambient, exemplar);
    for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
    return s;
  }

  /// Span of the rows of `gens` (need not be independent).
  static Subspace span(const Matrix<K>& gens) {
    auto [m, piv] = gens.rref();
    Subspace s;
    s.ambient_ = gens.cols();
    s.basis_ = Matrix<K>(piv.size(), gens.cols(), gens.proto());
    for (std::size_t i = 0; i < piv.size(); ++i)
      for (std::size_t j = 0; j < gens.cols(); ++j) s.basis_.at(i, j) = m.at(i, j);
    s.pivots_ = piv;
    return s;
  }

  static Subspace span_of(const std::vector<std::vector<K>>& vecs, std::size_t ambient,
                          const K& exemplar) {
    return span(Matrix<K>::from_rows(ambient, vecs, exemplar));
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<K>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const K& proto() const { return basis_.proto(); }

  std::vector<K> basis_vector(std::size_t i) const { return basis_.row(i); }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  /// Canonical residue of v modulo this subspace: pivot coordinates
  /// eliminated.  v is in the subspace iff the residue is zero.
  std::vector<K> reduce(const std::vector<K>& v) const {
    GORLAB_CHECK(v.size() == ambient_, "ambient dimension mismatch");
    std::vector<K> r = v;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const K f = r[pivots_[i]];
      if (f.is_zero()) continue;
      const K* b = basis_.row_ptr(i);
      for (std::size_t j = pivots_[i]; j < ambient_; ++j)
        if (!b[j].is_zero()) r[j] -= f * b[j];
    }
    return r;
  }

  bool contains(const std::vector<K>& v) const { return is_zero_vector(reduce(v)); }

  bool contains(const Subspace& other) const {
    check_ambient(other);
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_vector(i))) return false;
    return true;
  }

  /// Coordinates of v in the RREF basis, if v lies in the subspace.
  std::optional<std::vector<K>> coords(const std::vector<K>& v) const {
    if (!contains(v)) return std::nullopt;
    std::vector<K> c(dim(), proto());
    for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  std::vector<K> from_coords(const std::vector<K>& c) const {
    GORLAB_CHECK(c.size() == dim(), "coordinate length mismatch");
    std::vector<K> v(ambient_, proto());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (c[i].is_zero()) continue;
      const K* b = basis_.row_ptr(i);
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!b[j].is_zero()) v[j] += c[i] * b[j];
    }
    return v;
  }

  friend Subspace sum(const Subspace& a, const Subspace& b) {
    a.check_ambient(b);
    return span(a.basis_.vstack(b.basis_));
  }

  /// Intersection via the kernel of [A^T | -B^T].
  friend Subspace intersect(const Subspace& a, const Subspace& b) {
    a.check_ambient(b);
    if (a.dim() == 0 || b.dim() == 0) return zero(a.ambient_, a.proto());
    Matrix<K> at = a.basis_.transpose();         // n x da
    Matrix<K> bt = b.basis_.transpose();          // n x db
    for (std::size_t i = 0; i < bt.rows(); ++i)
      for (std::size_t j = 0; j < bt.cols(); ++j) bt.at(i, j) = -bt.at(i, j);
    Matrix<K> sys = at.hstack(bt);                // n x (da+db)
    Matrix<K> ker = sys.kernel_basis();           // rows (u, v) with A^T u = B^T v
    Matrix<K> gens(ker.rows(), a.ambient_, a.proto());
    for (std::size_t r = 0; r < ker.rows(); ++r) {
      std::vector<K> u(ker.row_ptr(r), ker.row_ptr(r) + a.dim());
      auto vec = a.basis_.transpose().apply(u);
      gens.set_row(r, vec);
    }
    return span(gens);
  }

  /// dim(a / b) for b <= a; throws if b is not contained in a.
  friend std::size_t quotient_dim(const Subspace& a, const Subspace& b) {
    a.check_ambient(b);
    if (!a.contains(b)) throw error("quotient_dim: second subspace not contained in first");
    return a.dim() - b.dim();
  }

  /// Ambient coordinate indices not used as pivots; the corresponding
  /// standard basis vectors form a transversal of the quotient.
  std::vector<std::size_t> complement_indices() const {
    std::vector<bool> is_pivot(ambient_, false);
    for (auto c : pivots_) is_pivot[c] = true;
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!is_pivot[j]) idx.push_back(j);
    return idx;
  }

 private:
  void check_ambient(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw error("subspace ambient dimension mismatch");
  }

  std::size_t ambient_ = 0;
  Matrix<K> basis_;
  std::vector<std::size_t> pivots_;
};

/// Kernel and image (column space) of a linear map given by a matrix.
/// dim ker + dim im = cols (rank-nullity) by construction.
template <class K>
std::pair<Subspace<K>, Subspace<K>> kernel_image(const Matrix<K>& m) {
  Subspace<K> ker = Subspace<K>::span(m.kernel_basis());
  Subspace<K> im = Subspace<K>::span(m.transpose());
  return {ker, im};
}

/// Intersection of the kernels of a list of matrices (all with the same
/// column count), computed by iterative refinement.
template <class K>
Subspace<K> kernel_intersection(const std::vector<Matrix<K>>& mats, std::size_t cols,
                                const K& exemplar) {
  Subspace<K> cur = Subspace<K>::full(cols, exemplar);
  for (const auto& m : mats) {
    if (cur.dim() == 0) break;
    GORLAB_CHECK(m.cols() == cols, "kernel_intersection shape mismatch");
    // restrict m to the current solution space: columns = m * basis^T
    Matrix<K> rest = m * cur.basis().transpose();  // m.rows x cur.dim
    Matrix<K> ker = rest.kernel_basis();           // coords in cur basis
    Matrix<K> gens(ker.rows(), cols, exemplar);
    for (std::size_t r = 0; r < ker.rows(); ++r)
      gens.set_row(r, cur.from_coords(ker.row(r)));
    cur = Subspace<K>::span(gens);
  }
  return cur;
}

}  // namespace gorlab
