#pragma once

#include <random>

#include "gorlab/algebra.hpp"

namespace gorlab {

/// Finitely generated module over an artinian algebra, given by one action
/// matrix per algebra basis element.
template <class K>
struct Module {
  AlgebraPtr<K> alg;
  std::size_t dim = 0;
  std::vector<Matrix<K>> act;  // act[i]: matrix of e_i on the module
  std::optional<std::vector<long long>> value_labels;

  const K& proto() const { return alg->proto(); }
  const Matrix<K>& action(std::size_t i) const { return act[i]; }

  /// Matrix of the action of an arbitrary algebra element.
  Matrix<K> action_of(const std::vector<K>& a) const {
    Matrix<K> m(dim, dim, proto());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) {
          const K& v = act[i].at(r, c);
          if (!v.is_zero()) m.at(r, c) += a[i] * v;
        }
    }
    return m;
  }
};

enum class ModuleValidation { none, generators, full };

template <class K>
void validate_module(const Module<K>& m, ModuleValidation level = ModuleValidation::generators) {
  const auto& a = *m.alg;
  GORLAB_CHECK(m.act.size() == a.dim(), "module action count mismatch");
  for (const auto& mat : m.act)
    GORLAB_CHECK(mat.rows() == m.dim && mat.cols() == m.dim, "module action shape mismatch");
  if (level == ModuleValidation::none) return;
  GORLAB_CHECK(m.act[a.unit_index()] == Matrix<K>::identity(m.dim, a.proto()),
               "unit does not act as identity");
  std::vector<std::size_t> idx;
  if (level == ModuleValidation::full) {
    for (std::size_t i = 0; i < a.dim(); ++i) idx.push_back(i);
  } else {
    idx = a.generator_indices();
  }
  for (auto i : idx)
    for (auto j : idx) {
      Matrix<K> lhs = m.act[i] * m.act[j];
      Matrix<K> rhs(m.dim, m.dim, a.proto());
      for (std::size_t k = 0; k < a.dim(); ++k) {
        const K& c = a.lmul(i).at(k, j);
        if (c.is_zero()) continue;
        for (std::size_t r = 0; r < m.dim; ++r)
          for (std::size_t s = 0; s < m.dim; ++s) {
            const K& v = m.act[k].at(r, s);
            if (!v.is_zero()) rhs.at(r, s) += c * v;
          }
      }
      GORLAB_CHECK(lhs == rhs, "module axioms fail on generator pair");
    }
}

template <class K>
Module<K> regular_module(const AlgebraPtr<K>& a) {
  Module<K> m;
  m.alg = a;
  m.dim = a->dim();
  for (std::size_t i = 0; i < a->dim(); ++i) m.act.push_back(a->lmul(i));
  m.value_labels = a->value_labels();
  return m;
}

/// Matlis dual of the regular module: the vector-space dual of R with
/// contragredient action (a.f)(b) = f(ab).  This is the canonical module.
template <class K>
Module<K> canonical_module(const AlgebraPtr<K>& a) {
  Module<K> m;
  m.alg = a;
  m.dim = a->dim();
  for (std::size_t i = 0; i < a->dim(); ++i) m.act.push_back(a->lmul(i).transpose());
  return m;
}

/// The residue field k = R/m as a module.
template <class K>
Module<K> simple_module(const AlgebraPtr<K>& a) {
  Module<K> m;
  m.alg = a;
  m.dim = 1;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    Matrix<K> mat(1, 1, a->proto());
    if (i == a->unit_index()) mat.at(0, 0) = a->proto().one_like();
    m.act.push_back(std::move(mat));
  }
  return m;
}

/// R^s with coordinates grouped in s blocks of dim R.
template <class K>
Module<K> free_module(const AlgebraPtr<K>& a, std::size_t s) {
  Module<K> m;
  m.alg = a;
  m.dim = s * a->dim();
  Matrix<K> id_s = Matrix<K>::identity(s, a->proto());
  for (std::size_t i = 0; i < a->dim(); ++i) m.act.push_back(kron(id_s, a->lmul(i)));
  return m;
}

/// soc M = {v : m v = 0}.
template <class K>
Subspace<K> socle(const Module<K>& m) {
  std::vector<Matrix<K>> mats;
  for (auto g : m.alg->generator_indices()) mats.push_back(m.act[g]);
  return kernel_intersection(mats, m.dim, m.proto());
}

/// m M = sum of the images of the generator actions.
template <class K>
Subspace<K> radical_submodule(const Module<K>& m) {
  std::vector<std::vector<K>> gens;
  for (auto g : m.alg->generator_indices())
    for (std::size_t j = 0; j < m.dim; ++j) gens.push_back(m.act[g].col(j));
  return Subspace<K>::span_of(gens, m.dim, m.proto());
}

/// Loewy series: dims of m^t M for t = 1, 2, ... down to zero.
template <class K>
std::vector<std::size_t> radical_filtration_dims(const Module<K>& m) {
  std::vector<std::size_t> dims;
  Subspace<K> cur = radical_submodule(m);
  while (cur.dim() > 0) {
    dims.push_back(cur.dim());
    std::vector<std::vector<K>> next;
    for (auto g : m.alg->generator_indices())
      for (std::size_t j = 0; j < cur.dim(); ++j)
        next.push_back(m.act[g].apply(cur.basis_vector(j)));
    Subspace<K> nx = Subspace<K>::span_of(next, m.dim, m.proto());
    GORLAB_CHECK(nx.dim() < cur.dim(), "radical filtration does not terminate");
    cur = nx;
  }
  return dims;
}

/// Standard-coordinate indices whose classes form a basis of M/mM.
template <class K>
std::vector<std::size_t> minimal_generator_indices(const Module<K>& m) {
  Subspace<K> acc = radical_submodule(m);
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < m.dim; ++i) {
    auto v = unit_vector(m.dim, i, m.proto());
    if (!acc.contains(v)) {
      idx.push_back(i);
      acc = sum(acc, Subspace<K>::span_of({v}, m.dim, m.proto()));
    }
  }
  return idx;
}

template <class K>
std::size_t minimal_generator_count(const Module<K>& m) {
  return m.dim - radical_submodule(m).dim();
}

/// {a in R : a v = 0 for all given v}, an ideal of R.
template <class K>
Subspace<K> annihilator_of_elements(const Module<K>& m, const std::vector<std::vector<K>>& vecs) {
  const std::size_t d = m.alg->dim();
  Matrix<K> sys(vecs.size() * m.dim, d, m.proto());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t t = 0; t < vecs.size(); ++t) {
      auto w = m.act[i].apply(vecs[t]);
      for (std::size_t r = 0; r < m.dim; ++r) sys.at(t * m.dim + r, i) = w[r];
    }
  return Subspace<K>::span(sys.kernel_basis());
}

template <class K>
Subspace<K> annihilator(const Module<K>& m) {
  std::vector<std::vector<K>> basis;
  for (std::size_t i = 0; i < m.dim; ++i) basis.push_back(unit_vector(m.dim, i, m.proto()));
  return annihilator_of_elements(m, basis);
}

template <class K>
struct Submodule {
  Module<K> mod;
  Subspace<K> space;  // inside the parent's coordinates
};

template <class K>
Submodule<K> submodule_from_subspace(const Module<K>& parent, const Subspace<K>& v) {
  GORLAB_CHECK(v.ambient_dim() == parent.dim, "submodule ambient mismatch");
  Submodule<K> s;
  s.space = v;
  s.mod.alg = parent.alg;
  s.mod.dim = v.dim();
  for (std::size_t i = 0; i < parent.act.size(); ++i) {
    Matrix<K> a(v.dim(), v.dim(), parent.proto());
    for (std::size_t t = 0; t < v.dim(); ++t) {
      auto img = parent.act[i].apply(v.basis_vector(t));
      auto c = v.coords(img);
      GORLAB_CHECK(c.has_value(), "subspace is not action-invariant");
      a.set_col(t, *c);
    }
    s.mod.act.push_back(std::move(a));
  }
  return s;
}

template <class K>
struct QuotientModule {
  Module<K> mod;
  Subspace<K> rel;               // the subspace quotiented out
  std::vector<std::size_t> rep;  // ambient indices carrying the quotient coords

  std::vector<K> project(const std::vector<K>& ambient) const {
    auto r = rel.reduce(ambient);
    std::vector<K> c;
    c.reserve(rep.size());
    for (auto i : rep) c.push_back(r[i]);
    return c;
  }
};

template <class K>
QuotientModule<K> quotient_module(const Module<K>& parent, const Subspace<K>& w) {
  GORLAB_CHECK(w.ambient_dim() == parent.dim, "quotient ambient mismatch");
  QuotientModule<K> q;
  q.rel = w;
  q.rep = w.complement_indices();
  q.mod.alg = parent.alg;
  q.mod.dim = q.rep.size();
  for (std::size_t i = 0; i < parent.act.size(); ++i) {
    Matrix<K> a(q.rep.size(), q.rep.size(), parent.proto());
    for (std::size_t t = 0; t < q.rep.size(); ++t) {
      auto img = parent.act[i].col(q.rep[t]);
      auto red = w.reduce(img);
      for (std::size_t r = 0; r < q.rep.size(); ++r) a.at(r, t) = red[q.rep[r]];
    }
    q.mod.act.push_back(std::move(a));
  }
  return q;
}

/// Basis of Hom_R(M, N) plus an induced module structure on it.
template <class K>
struct HomSpace {
  Module<K> mod;                   // module structure on the hom space
  Subspace<K> solutions;           // inside K^{dim M * dim N}, column-major vec
  std::vector<Matrix<K>> basis;    // hom matrices (dim N x dim M)
  std::size_t src_dim = 0, dst_dim = 0;

  std::size_t dim() const { return basis.size(); }

  Matrix<K> element(const std::vector<K>& coords) const {
    GORLAB_CHECK(coords.size() == basis.size(), "hom coordinate mismatch");
    Matrix<K> f(dst_dim, src_dim, solutions.proto());
    for (std::size_t t = 0; t < coords.size(); ++t) {
      if (coords[t].is_zero()) continue;
      for (std::size_t r = 0; r < dst_dim; ++r)
        for (std::size_t c = 0; c < src_dim; ++c) {
          const K& v = basis[t].at(r, c);
          if (!v.is_zero()) f.at(r, c) += coords[t] * v;
        }
    }
    return f;
  }

  /// Evaluation accessor: the hom with the given coordinates applied to v.
  std::vector<K> evaluate(const std::vector<K>& coords, const std::vector<K>& v) const {
    return element(coords).apply(v);
  }
};

namespace detail {

template <class K>
std::vector<K> vec_cm(const Matrix<K>& f) {
  std::vector<K> v;
  v.reserve(f.rows() * f.cols());
  for (std::size_t c = 0; c < f.cols(); ++c)
    for (std::size_t r = 0; r < f.rows(); ++r) v.push_back(f.at(r, c));
  return v;
}

template <class K>
Matrix<K> unvec_cm(const std::vector<K>& v, std::size_t rows, std::size_t cols, const K& ex) {
  Matrix<K> f(rows, cols, ex);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r) f.at(r, c) = v[c * rows + r];
  return f;
}

}  // namespace detail

/// Solves F act_M(g) = act_N(g) F over the generators of m; linearity over
/// the unit and polynomial generation of the algebra give all of R.
template <class K>
HomSpace<K> hom_module(const Module<K>& m, const Module<K>& n) {
  GORLAB_CHECK(m.alg == n.alg, "hom requires modules over the same algebra");
  const K ex = m.proto();
  const std::size_t u = m.dim * n.dim;
  std::vector<Matrix<K>> constraints;
  Matrix<K> id_m = Matrix<K>::identity(m.dim, ex);
  Matrix<K> id_n = Matrix<K>::identity(n.dim, ex);
  for (auto g : m.alg->generator_indices()) {
    Matrix<K> c = kron(m.act[g].transpose(), id_n) - kron(id_m, n.act[g]);
    constraints.push_back(std::move(c));
  }
  HomSpace<K> h;
  h.src_dim = m.dim;
  h.dst_dim = n.dim;
  h.solutions = kernel_intersection(constraints, u, ex);
  for (std::size_t t = 0; t < h.solutions.dim(); ++t)
    h.basis.push_back(detail::unvec_cm(h.solutions.basis_vector(t), n.dim, m.dim, ex));
  // module structure: (a f) = act_N(a) after f
  h.mod.alg = m.alg;
  h.mod.dim = h.basis.size();
  for (std::size_t i = 0; i < m.alg->dim(); ++i) {
    Matrix<K> a(h.mod.dim, h.mod.dim, ex);
    for (std::size_t t = 0; t < h.mod.dim; ++t) {
      Matrix<K> g = n.act[i] * h.basis[t];
      auto c = h.solutions.coords(detail::vec_cm(g));
      GORLAB_CHECK(c.has_value(), "hom space not closed under the algebra action");
      a.set_col(t, *c);
    }
    h.mod.act.push_back(std::move(a));
  }
  return h;
}

/// Minimal free presentation R^q -> R^s -> M -> 0 together with the first
/// syzygy and the transpose.
template <class K>
struct Presentation {
  std::size_t cover_rank = 0;     // s = mu(M)
  std::size_t rel_count = 0;      // q = mu(Omega M)
  Module<K> syzygy;               // Omega M
  Subspace<K> syz_embed;          // Omega M as a subspace of R^s
  Matrix<K> pres_cols;            // (s dim R) x q, minimal generators of Omega M
  Module<K> transpose;            // Tr M = coker of the dualized map
};

template <class K>
Presentation<K> minimal_presentation(const Module<K>& m) {
  const auto& alg = *m.alg;
  const K ex = m.proto();
  const std::size_t d = alg.dim();
  Presentation<K> p;

  auto gens = minimal_generator_indices(m);
  const std::size_t s = gens.size();
  p.cover_rank = s;

  // cover map R^s -> M
  Matrix<K> phi(m.dim, s * d, ex);
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t i = 0; i < d; ++i) {
      auto col = m.act[i].col(gens[j]);
      for (std::size_t r = 0; r < m.dim; ++r) phi.at(r, j * d + i) = col[r];
    }
  p.syz_embed = Subspace<K>::span(phi.kernel_basis());

  Module<K> f0 = free_module(m.alg, s);
  auto sub = submodule_from_subspace(f0, p.syz_embed);
  p.syzygy = sub.mod;

  auto omega_gens = minimal_generator_indices(p.syzygy);
  const std::size_t q = omega_gens.size();
  p.rel_count = q;
  p.pres_cols = Matrix<K>(s * d, q, ex);
  for (std::size_t k = 0; k < q; ++k)
    p.pres_cols.set_col(k, p.syz_embed.basis_vector(omega_gens[k]));

  // minimality: presentation entries lie in m
  for (std::size_t k = 0; k < q; ++k)
    for (std::size_t j = 0; j < s; ++j)
      GORLAB_CHECK(p.pres_cols.at(j * d + alg.unit_index(), k).is_zero(),
                   "presentation matrix has a unit entry");

  // transpose: coker of the dualized presentation R^s -> R^q,
  // e_j* -> sum_k A_jk e_k*
  Module<K> fq = free_module(m.alg, q);
  std::vector<std::vector<K>> image;
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t i = 0; i < d; ++i) {
      // e_i e_j* maps to the vector with block k equal to e_i * A_jk
      std::vector<K> v(q * d, ex);
      for (std::size_t k = 0; k < q; ++k) {
        std::vector<K> entry(d, ex);
        for (std::size_t r = 0; r < d; ++r) entry[r] = p.pres_cols.at(j * d + r, k);
        auto prod = alg.lmul(i).apply(entry);
        for (std::size_t r = 0; r < d; ++r) v[k * d + r] = prod[r];
      }
      image.push_back(std::move(v));
    }
  Subspace<K> im = Subspace<K>::span_of(image, q * d, ex);
  p.transpose = quotient_module(fq, im).mod;
  return p;
}

template <class K>
Module<K> syzygy_module(const Module<K>& m) {
  return minimal_presentation(m).syzygy;
}

template <class K>
Module<K> transpose_module(const Module<K>& m) {
  return minimal_presentation(m).transpose;
}

/// Ext^1(M, N) = Hom(Omega M, N) / restrictions of Hom(R^s, N).
template <class K>
Module<K> ext1(const Module<K>& m, const Module<K>& n) {
  GORLAB_CHECK(m.alg == n.alg, "ext requires modules over the same algebra");
  const K ex = m.proto();
  const std::size_t d = m.alg->dim();
  auto p = minimal_presentation(m);
  if (p.syzygy.dim == 0 || n.dim == 0) {
    Module<K> z;
    z.alg = m.alg;
    z.dim = 0;
    for (std::size_t i = 0; i < d; ++i) z.act.push_back(Matrix<K>(0, 0, ex));
    return z;
  }
  HomSpace<K> h = hom_module(p.syzygy, n);
  // restriction to Omega M of the hom R^s -> N sending block j to act(-) n_b
  std::vector<std::vector<K>> restricted;
  for (std::size_t j = 0; j < p.cover_rank; ++j)
    for (std::size_t b = 0; b < n.dim; ++b) {
      Matrix<K> g(n.dim, p.syzygy.dim, ex);
      for (std::size_t t = 0; t < p.syzygy.dim; ++t) {
        auto w = p.syz_embed.basis_vector(t);
        std::vector<K> col(n.dim, ex);
        for (std::size_t i = 0; i < d; ++i) {
          const K& c = w[j * d + i];
          if (c.is_zero()) continue;
          auto nb = n.act[i].col(b);
          for (std::size_t r = 0; r < n.dim; ++r) col[r] += c * nb[r];
        }
        g.set_col(t, col);
      }
      auto coords = h.solutions.coords(detail::vec_cm(g));
      GORLAB_CHECK(coords.has_value(), "restricted hom escapes the hom space");
      restricted.push_back(*coords);
    }
  Subspace<K> im = Subspace<K>::span_of(restricted, h.mod.dim, ex);
  return quotient_module(h.mod, im).mod;
}

/// Ext^i via dimension shifting over iterated minimal syzygies.
template <class K>
Module<K> ext_i(const Module<K>& m, const Module<K>& n, std::size_t i) {
  GORLAB_CHECK(i >= 1, "ext_i needs i >= 1");
  Module<K> cur = m;
  for (std::size_t t = 1; t < i; ++t) cur = syzygy_module(cur);
  return ext1(cur, n);
}

/// M tensor_R N as a quotient of the vector-space tensor product.
template <class K>
QuotientModule<K> tensor_module(const Module<K>& m, const Module<K>& n) {
  GORLAB_CHECK(m.alg == n.alg, "tensor requires modules over the same algebra");
  const K ex = m.proto();
  const std::size_t u = m.dim * n.dim;
  Module<K> amb;
  amb.alg = m.alg;
  amb.dim = u;
  Matrix<K> id_n = Matrix<K>::identity(n.dim, ex);
  for (std::size_t i = 0; i < m.alg->dim(); ++i) amb.act.push_back(kron(m.act[i], id_n));
  std::vector<std::vector<K>> rel;
  for (auto g : m.alg->generator_indices())
    for (std::size_t a = 0; a < m.dim; ++a)
      for (std::size_t b = 0; b < n.dim; ++b) {
        std::vector<K> v(u, ex);
        auto ca = m.act[g].col(a);
        for (std::size_t r = 0; r < m.dim; ++r)
          if (!ca[r].is_zero()) v[r * n.dim + b] += ca[r];
        auto cb = n.act[g].col(b);
        for (std::size_t r = 0; r < n.dim; ++r)
          if (!cb[r].is_zero()) v[a * n.dim + r] -= cb[r];
        if (!is_zero_vector(v)) rel.push_back(std::move(v));
      }
  Subspace<K> w = Subspace<K>::span_of(rel, u, ex);
  return quotient_module(amb, w);
}

/// Tor_1(M, N) = ker(Omega M tensor N -> R^s tensor N), using the canonical
/// identification R^s tensor N = N^s.
template <class K>
Module<K> tor1(const Module<K>& m, const Module<K>& n) {
  GORLAB_CHECK(m.alg == n.alg, "tor requires modules over the same algebra");
  const K ex = m.proto();
  const std::size_t d = m.alg->dim();
  auto p = minimal_presentation(m);
  if (p.syzygy.dim == 0 || n.dim == 0) {
    Module<K> z;
    z.alg = m.alg;
    z.dim = 0;
    for (std::size_t i = 0; i < d; ++i) z.act.push_back(Matrix<K>(0, 0, ex));
    return z;
  }
  auto t = tensor_module(p.syzygy, n);
  const std::size_t s = p.cover_rank;
  Matrix<K> map(s * n.dim, t.mod.dim, ex);
  for (std::size_t col = 0; col < t.mod.dim; ++col) {
    std::size_t a = t.rep[col] / n.dim, b = t.rep[col] % n.dim;
    auto w = p.syz_embed.basis_vector(a);
    for (std::size_t j = 0; j < s; ++j)
      for (std::size_t i = 0; i < d; ++i) {
        const K& c = w[j * d + i];
        if (c.is_zero()) continue;
        auto nb = n.act[i].col(b);
        for (std::size_t r = 0; r < n.dim; ++r) map.at(j * n.dim + r, col) += c * nb[r];
      }
  }
  Subspace<K> ker = Subspace<K>::span(map.kernel_basis());
  return submodule_from_subspace(t.mod, ker).mod;
}

enum class IsoVerdict { yes, no, unknown };

template <class K>
struct IsoResult {
  IsoVerdict verdict = IsoVerdict::unknown;
  std::optional<Matrix<K>> iso;
  std::string witness;  // differing invariant, on a No
};

struct IsoOptions {
  std::size_t random_trials = 200;
  unsigned long long exhaustive_cap = 1ull << 16;
  std::uint64_t seed = 1;
};

namespace detail {

inline Fq random_coeff(const Fq& ex, std::mt19937_64& rng) { return random_element(ex, rng); }
inline Rat random_coeff(const Rat&, std::mt19937_64& rng) {
  return Rat(static_cast<long>(rng() % 21) - 10);
}

inline unsigned long long field_order_or_zero(const Fq& ex) { return ex.order(); }
inline unsigned long long field_order_or_zero(const Rat&) { return 0; }

inline Fq element_from_index(const Fq& ex, std::uint64_t idx) { return ex.from_index(idx); }
inline Rat element_from_index(const Rat& ex, std::uint64_t) { return ex.zero_like(); }

}  // namespace detail

/// Isomorphism test.  "No" is only reported with a differing computable
/// invariant; a fruitless search yields "unknown", never "no".
template <class K>
IsoResult<K> module_isomorphic(const Module<K>& m, const Module<K>& n,
                               const IsoOptions& opt = {}) {
  GORLAB_CHECK(m.alg == n.alg, "iso test requires modules over the same algebra");
  IsoResult<K> res;
  auto mismatch = [&](const std::string& what, std::size_t a, std::size_t b) {
    res.verdict = IsoVerdict::no;
    res.witness = what + ": " + std::to_string(a) + " vs " + std::to_string(b);
    return res;
  };
  if (m.dim != n.dim) return mismatch("dim", m.dim, n.dim);
  if (m.dim == 0) {
    res.verdict = IsoVerdict::yes;
    res.iso = Matrix<K>(0, 0, m.proto());
    return res;
  }
  std::size_t mu_m = minimal_generator_count(m), mu_n = minimal_generator_count(n);
  if (mu_m != mu_n) return mismatch("minimal generators", mu_m, mu_n);
  std::size_t soc_m = socle(m).dim(), soc_n = socle(n).dim();
  if (soc_m != soc_n) return mismatch("socle dim", soc_m, soc_n);
  auto fm = radical_filtration_dims(m), fn = radical_filtration_dims(n);
  if (fm != fn) {
    res.verdict = IsoVerdict::no;
    res.witness = "radical filtration differs";
    return res;
  }

  bool same = true;
  for (std::size_t i = 0; i < m.act.size() && same; ++i) same = (m.act[i] == n.act[i]);
  if (same) {
    res.verdict = IsoVerdict::yes;
    res.iso = Matrix<K>::identity(m.dim, m.proto());
    return res;
  }

  HomSpace<K> h = hom_module(m, n);
  std::size_t end_m = hom_module(m, m).dim();
  if (h.dim() != end_m) return mismatch("hom space dim", h.dim(), end_m);

  auto try_elem = [&](const std::vector<K>& coords) -> bool {
    Matrix<K> f = h.element(coords);
    if (f.rank() != m.dim) return false;
    res.verdict = IsoVerdict::yes;
    res.iso = f;
    return true;
  };

  for (std::size_t t = 0; t < h.dim(); ++t) {
    auto c = zero_vector(h.dim(), m.proto());
    c[t] = m.proto().one_like();
    if (try_elem(c)) return res;
  }
  std::mt19937_64 rng(opt.seed);
  for (std::size_t t = 0; t < opt.random_trials; ++t) {
    std::vector<K> c;
    c.reserve(h.dim());
    for (std::size_t i = 0; i < h.dim(); ++i) c.push_back(detail::random_coeff(m.proto(), rng));
    if (try_elem(c)) return res;
  }
  unsigned long long q = detail::field_order_or_zero(m.proto());
  if (q != 0) {
    // exhaustive over all coefficient vectors when small enough
    double total = 1;
    for (std::size_t i = 0; i < h.dim(); ++i) total *= static_cast<double>(q);
    if (total <= static_cast<double>(opt.exhaustive_cap)) {
      std::vector<std::uint64_t> odo(h.dim(), 0);
      std::vector<K> c(h.dim(), m.proto());
      while (true) {
        std::size_t i = 0;
        while (i < h.dim()) {
          if (++odo[i] < q) break;
          odo[i] = 0;
          ++i;
        }
        if (i == h.dim()) break;
        for (std::size_t j = 0; j < h.dim(); ++j)
          c[j] = detail::element_from_index(m.proto(), odo[j]);
        if (try_elem(c)) return res;
      }
    }
  }
  res.verdict = IsoVerdict::unknown;
  res.witness = "invariants agree but no isomorphism found";
  return res;
}

}  // namespace gorlab
