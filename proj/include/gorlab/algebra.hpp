#pragma once

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gorlab/field.hpp"
#include "gorlab/monomial.hpp"
#include "gorlab/subspace.hpp"

namespace gorlab {

/// Retained construction data for algebras presented as monomial quotients.
struct MonomialPresentation {
  std::vector<std::string> vars;
  std::vector<Monomial> basis;
  std::vector<Monomial> ideal_gens;  // minimal generators
};

/// Finite-dimensional commutative local algebra over an exact field, given
/// by structure constants.  Validated on construction: commutative,
/// associative, unital, local with nilpotent maximal ideal, and presented
/// on a basis where index `unit_index()` is 1 and all other basis vectors
/// lie in the maximal ideal.
template <class K>
class Algebra {
 public:
  /// `lmul[i]` is the matrix of multiplication by basis element e_i, so
  /// column j of lmul[i] holds the coordinates of e_i * e_j.
  Algebra(std::vector<Matrix<K>> lmul, std::vector<std::string> labels, const K& exemplar,
          std::optional<std::vector<long long>> value_labels = std::nullopt,
          std::optional<MonomialPresentation> mono = std::nullopt)
      : proto_(exemplar.zero_like()),
        dim_(lmul.size()),
        labels_(std::move(labels)),
        lmul_(std::move(lmul)),
        values_(std::move(value_labels)),
        mono_(std::move(mono)) {
    validate();
  }

  const K& proto() const { return proto_; }
  std::size_t dim() const { return dim_; }
  std::size_t unit_index() const { return unit_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Matrix<K>& lmul(std::size_t i) const { return lmul_[i]; }
  const Subspace<K>& max_ideal() const { return mideal_; }
  const std::vector<std::size_t>& generator_indices() const { return gens_; }
  std::size_t edim() const { return gens_.size(); }
  const std::optional<std::vector<long long>>& value_labels() const { return values_; }
  const std::optional<MonomialPresentation>& monomial_presentation() const { return mono_; }

  std::vector<K> unit_vector_elem() const { return unit_vector(dim_, unit_, proto_); }

  /// Matrix of multiplication by the element with coordinate vector a.
  Matrix<K> mult_by(const std::vector<K>& a) const {
    GORLAB_CHECK(a.size() == dim_, "element dimension mismatch");
    Matrix<K> m(dim_, dim_, proto_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) {
          const K& v = lmul_[i].at(r, c);
          if (!v.is_zero()) m.at(r, c) += a[i] * v;
        }
    }
    return m;
  }

  std::vector<K> mult(const std::vector<K>& a, const std::vector<K>& b) const {
    std::vector<K> r(dim_, proto_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (a[i].is_zero()) continue;
      auto col = lmul_[i].apply(b);
      for (std::size_t k = 0; k < dim_; ++k) r[k] += a[i] * col[k];
    }
    return r;
  }

  /// Product subspace span{a*b : a in U, b in V}.
  Subspace<K> product_subspace(const Subspace<K>& u, const Subspace<K>& v) const {
    std::vector<std::vector<K>> prods;
    for (std::size_t i = 0; i < u.dim(); ++i) {
      Matrix<K> m = mult_by(u.basis_vector(i));
      for (std::size_t j = 0; j < v.dim(); ++j) prods.push_back(m.apply(v.basis_vector(j)));
    }
    return Subspace<K>::span_of(prods, dim_, proto_);
  }

  std::string element_str(const std::vector<K>& v) const {
    std::string s;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (v[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += to_string(v[i]) + "*" + labels_[i];
    }
    return s.empty() ? "0" : s;
  }

 private:
  void validate() {
    GORLAB_CHECK(dim_ >= 1, "algebra must have positive dimension");
    GORLAB_CHECK(labels_.size() == dim_, "label count mismatch");
    for (const auto& m : lmul_)
      GORLAB_CHECK(m.rows() == dim_ && m.cols() == dim_, "structure constant shape mismatch");

    // unit detection
    Matrix<K> id = Matrix<K>::identity(dim_, proto_);
    bool found_unit = false;
    for (std::size_t i = 0; i < dim_; ++i)
      if (lmul_[i] == id) {
        unit_ = i;
        found_unit = true;
        break;
      }
    if (!found_unit) throw error("algebra has no unit basis element");

    // commutativity: e_i e_j = e_j e_i
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k)
          if (lmul_[i].at(k, j) != lmul_[j].at(k, i)) throw error("multiplication table is not commutative");

    // associativity: L_i L_j = sum_k c(i,j,k) L_k
    for (std::size_t i = 0; i < dim_; ++i) {
      if (i == unit_) continue;
      for (std::size_t j = i; j < dim_; ++j) {
        if (j == unit_) continue;
        Matrix<K> lhs = lmul_[i] * lmul_[j];
        Matrix<K> rhs(dim_, dim_, proto_);
        for (std::size_t k = 0; k < dim_; ++k) {
          const K& c = lmul_[i].at(k, j);
          if (c.is_zero()) continue;
          for (std::size_t r = 0; r < dim_; ++r)
            for (std::size_t s = 0; s < dim_; ++s) {
              const K& v = lmul_[k].at(r, s);
              if (!v.is_zero()) rhs.at(r, s) += c * v;
            }
        }
        if (lhs != rhs) throw error("multiplication table is not associative");
      }
    }

    // 1-aligned local presentation: products of non-unit basis elements
    // never reach the unit coordinate.
    for (std::size_t i = 0; i < dim_; ++i) {
      if (i == unit_) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (j == unit_) continue;
        if (!lmul_[i].at(unit_, j).is_zero())
          throw error("basis is not aligned with the maximal ideal (a product of non-unit "
                      "basis elements has a unit component)");
      }
    }

    std::vector<std::vector<K>> mvecs;
    for (std::size_t i = 0; i < dim_; ++i)
      if (i != unit_) mvecs.push_back(unit_vector(dim_, i, proto_));
    mideal_ = Subspace<K>::span_of(mvecs, dim_, proto_);

    // nilpotency of the maximal ideal
    Subspace<K> power = mideal_;
    std::size_t steps = 0;
    while (power.dim() > 0) {
      if (++steps > dim_ + 1) throw error("maximal ideal is not nilpotent (algebra not local)");
      power = product_subspace(mideal_, power);
    }

    // minimal generators of m: basis indices spanning m / m^2
    Subspace<K> m2 = product_subspace(mideal_, mideal_);
    Subspace<K> acc = m2;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (i == unit_) continue;
      auto v = unit_vector(dim_, i, proto_);
      if (!acc.contains(v)) {
        gens_.push_back(i);
        acc = sum(acc, Subspace<K>::span_of({v}, dim_, proto_));
      }
    }
    if (values_) GORLAB_CHECK(values_->size() == dim_, "value label count mismatch");
  }

  K proto_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<Matrix<K>> lmul_;
  std::size_t unit_ = 0;
  Subspace<K> mideal_;
  std::vector<std::size_t> gens_;
  std::optional<std::vector<long long>> values_;
  std::optional<MonomialPresentation> mono_;
};

template <class K>
using AlgebraPtr = std::shared_ptr<const Algebra<K>>;

/// k[vars]/(monomial ideal); the ideal must contain a pure power of every
/// variable.  Basis: standard monomials in graded order, unit first.
template <class K>
AlgebraPtr<K> algebra_from_monomial_quotient(const std::vector<std::string>& vars,
                                             const std::vector<Monomial>& raw_gens,
                                             const K& exemplar, std::size_t dim_cap = 4096) {
  for (const auto& v : vars) {
    if (!is_valid_var_name(v)) throw parse_error("invalid variable name '" + v + "'");
    if (std::count(vars.begin(), vars.end(), v) != 1)
      throw parse_error("duplicate variable name '" + v + "'");
  }
  for (const auto& g : raw_gens) {
    GORLAB_CHECK(g.size() == vars.size(), "generator arity mismatch");
    if (total_degree(g) == 0) throw error("unit generator: quotient would be the zero ring");
  }
  auto gens = minimalize_monomial_gens(raw_gens);
  auto basis = standard_monomials(vars.size(), gens, dim_cap);
  GORLAB_CHECK(!basis.empty() && total_degree(basis[0]) == 0, "standard basis missing the unit");

  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;

  const std::size_t n = basis.size();
  std::vector<Matrix<K>> lmul(n, Matrix<K>(n, n, exemplar));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Monomial prod = mono_mul(basis[i], basis[j]);
      if (in_monomial_ideal(gens, prod)) continue;
      auto it = index.find(prod);
      GORLAB_CHECK(it != index.end(), "product escaped the standard basis");
      lmul[i].at(it->second, j) = exemplar.one_like();
    }

  std::vector<std::string> labels;
  for (const auto& b : basis) labels.push_back(print_monomial(vars, b));
  MonomialPresentation mono{vars, basis, gens};
  return std::make_shared<Algebra<K>>(std::move(lmul), std::move(labels), exemplar, std::nullopt,
                                      std::move(mono));
}

template <class K>
AlgebraPtr<K> algebra_from_monomial_strings(const std::vector<std::string>& vars,
                                            const std::vector<std::string>& gen_strings,
                                            const K& exemplar, std::size_t dim_cap = 4096) {
  std::vector<Monomial> gens;
  for (const auto& s : gen_strings) gens.push_back(parse_monomial(vars, s));
  return algebra_from_monomial_quotient(vars, gens, exemplar, dim_cap);
}

/// A/I for a proper ideal I given as a subspace.  The quotient basis is the
/// set of original basis vectors at non-pivot columns of I's RREF, so
/// labels and value tags carry over and the unit stays first.
template <class K>
AlgebraPtr<K> quotient_algebra(const AlgebraPtr<K>& a, const Subspace<K>& ideal) {
  GORLAB_CHECK(ideal.ambient_dim() == a->dim(), "ideal ambient mismatch");
  if (ideal.dim() == a->dim()) throw error("quotient by the unit ideal");
  if (!ideal.contains(a->product_subspace(Subspace<K>::full(a->dim(), a->proto()), ideal)))
    throw error("subspace is not an ideal");
  // A proper validated ideal never has a pivot at the unit column (such a
  // row would be a unit element), so the unit survives into the complement.
  auto rep = ideal.complement_indices();
  const std::size_t n = rep.size();
  std::vector<Matrix<K>> lmul(n, Matrix<K>(n, n, a->proto()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto prod = a->lmul(rep[i]).col(rep[j]);
      auto red = ideal.reduce(prod);
      for (std::size_t k = 0; k < n; ++k) lmul[i].at(k, j) = red[rep[k]];
    }
  std::vector<std::string> labels;
  std::optional<std::vector<long long>> values;
  if (a->value_labels()) values.emplace();
  for (auto idx : rep) {
    labels.push_back(a->labels()[idx]);
    if (values) values->push_back((*a->value_labels())[idx]);
  }
  return std::make_shared<Algebra<K>>(std::move(lmul), std::move(labels), a->proto(),
                                      std::move(values), std::nullopt);
}

/// Reads a prime-field algebra in the degree-s extension of the same field.
inline AlgebraPtr<Fq> extend_algebra(const AlgebraPtr<Fq>& a, std::uint8_t deg) {
  Fq ex = a->proto().extend(deg);
  std::vector<Matrix<Fq>> lmul;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    Matrix<Fq> m(a->dim(), a->dim(), ex);
    for (std::size_t r = 0; r < a->dim(); ++r)
      for (std::size_t c = 0; c < a->dim(); ++c) m.at(r, c) = a->lmul(i).at(r, c).extend(deg);
    lmul.push_back(std::move(m));
  }
  return std::make_shared<Algebra<Fq>>(std::move(lmul), a->labels(), ex, a->value_labels(),
                                       a->monomial_presentation());
}

}  // namespace gorlab
