#pragma once

#include <limits>

#include "gorlab/module.hpp"

namespace gorlab {

enum class TriState { yes, no, unknown };
enum class SvState { yes, no, skipped };

inline const char* to_cstr(TriState t) {
  switch (t) {
    case TriState::yes: return "yes";
    case TriState::no: return "no";
    default: return "unknown";
  }
}
inline const char* to_cstr(SvState t) {
  switch (t) {
    case SvState::yes: return "yes";
    case SvState::no: return "no";
    default: return "skipped";
  }
}

inline TriState tri_of(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::yes: return TriState::yes;
    case IsoVerdict::no: return TriState::no;
    default: return TriState::unknown;
  }
}

namespace detail {

inline unsigned long long sat_cap() { return std::numeric_limits<unsigned long long>::max() / 4; }
inline unsigned long long sat_add(unsigned long long a, unsigned long long b) {
  return (a > sat_cap() - b) ? sat_cap() : a + b;
}
inline unsigned long long sat_mul(unsigned long long a, unsigned long long b) {
  if (a == 0 || b == 0) return 0;
  if (a > sat_cap() / b) return sat_cap();
  return a * b;
}

inline unsigned long long pow_sat(unsigned long long q, std::size_t r) {
  unsigned long long v = 1;
  for (std::size_t i = 0; i < r; ++i) v = sat_mul(v, q);
  return v;
}

}  // namespace detail

/// Number of k-dimensional subspaces of F_q^n, saturating on overflow.
inline unsigned long long gaussian_binomial(std::size_t n, std::size_t k,
                                            unsigned long long q) {
  if (k > n) return 0;
  // [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q
  std::vector<unsigned long long> row(n + 1, 0);
  row[0] = 1;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = std::min(i, k); j > 0; --j)
      row[j] = detail::sat_add(row[j - 1], detail::sat_mul(detail::pow_sat(q, j), row[j]));
  return row[k];
}

/// Visits every k-dimensional subspace of F_q^n exactly once, via RREF
/// normal forms in a fixed deterministic order.  The visitor receives the
/// k x n basis matrix and returns true to stop early; the function returns
/// whether the visitor stopped.
template <class Visitor>
bool for_each_subspace(std::size_t n, std::size_t k, const Fq& ex, Visitor&& fn) {
  if (k > n) return false;
  if (k == 0) return fn(Matrix<Fq>(0, n, ex));
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  const unsigned long long q = ex.order();
  while (true) {
    // free positions: (row i, col j) with j > piv[i], j not a pivot
    std::vector<std::pair<std::size_t, std::size_t>> free_pos;
    {
      std::vector<bool> is_piv(n, false);
      for (auto c : piv) is_piv[c] = true;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = piv[i] + 1; j < n; ++j)
          if (!is_piv[j]) free_pos.emplace_back(i, j);
    }
    std::vector<std::uint64_t> odo(free_pos.size(), 0);
    Matrix<Fq> m(k, n, ex);
    for (std::size_t i = 0; i < k; ++i) m.at(i, piv[i]) = ex.one_like();
    while (true) {
      for (std::size_t t = 0; t < free_pos.size(); ++t)
        m.at(free_pos[t].first, free_pos[t].second) = ex.from_index(odo[t]);
      if (fn(m)) return true;
      std::size_t t = 0;
      while (t < odo.size()) {
        if (++odo[t] < q) break;
        odo[t] = 0;
        ++t;
      }
      if (t == odo.size()) break;
    }
    // next pivot combination, lexicographic
    std::size_t i = k;
    while (i-- > 0) {
      if (piv[i] + (k - i) <= n - 1) {
        ++piv[i];
        for (std::size_t j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
        break;
      }
      if (i == 0) return false;
    }
  }
}

/// tr(omega) as a subspace of R, and the residue dim R - dim tr(omega).
template <class K>
struct TraceResult {
  Subspace<K> trace;
  std::size_t residue = 0;
};

template <class K>
TraceResult<K> trace_ideal_and_residue(const AlgebraPtr<K>& a) {
  auto w = canonical_module(a);
  auto r = regular_module(a);
  auto h = hom_module(w, r);
  std::vector<std::vector<K>> images;
  for (std::size_t t = 0; t < h.dim(); ++t)
    for (std::size_t j = 0; j < w.dim; ++j) images.push_back(h.basis[t].col(j));
  TraceResult<K> out;
  out.trace = Subspace<K>::span_of(images, a->dim(), a->proto());
  out.residue = a->dim() - out.trace.dim();
  return out;
}

template <class K>
struct WagResult {
  TriState verdict = TriState::unknown;
  std::optional<Subspace<K>> ideal;  // certificate: I in soc R with R/I Gorenstein
  std::optional<std::vector<K>> w;   // certificate: R w contains m omega
  std::string note;
};

struct WagOptions {
  unsigned long long enumeration_cap = 1ull << 20;
  std::size_t rational_trials = 200;
  std::uint64_t seed = 1;
};

namespace detail {

/// dim soc(R/I) for an ideal I given inside R, without building the
/// quotient algebra: counts {v : m v in I} modulo I.
template <class K>
std::size_t quotient_socle_dim(const Algebra<K>& a, const Subspace<K>& ideal) {
  const std::size_t d = a.dim();
  auto rep = ideal.complement_indices();
  std::vector<Matrix<K>> mats;
  for (auto g : a.generator_indices()) {
    Matrix<K> pm(rep.size(), d, a.proto());
    for (std::size_t c = 0; c < d; ++c) {
      auto red = ideal.reduce(a.lmul(g).col(c));
      for (std::size_t r = 0; r < rep.size(); ++r) pm.at(r, c) = red[rep[r]];
    }
    mats.push_back(std::move(pm));
  }
  auto pre = kernel_intersection(mats, d, a.proto());
  return pre.dim() - ideal.dim();
}

/// From a certificate ideal, produce w with R w = ann_omega(I) >= m omega.
template <class K>
std::vector<K> wag_witness_from_ideal(const AlgebraPtr<K>& a, const Module<K>& w_mod,
                                      const Subspace<K>& ideal) {
  std::vector<Matrix<K>> mats;
  for (std::size_t t = 0; t < ideal.dim(); ++t)
    mats.push_back(w_mod.action_of(ideal.basis_vector(t)));
  auto x = kernel_intersection(mats, w_mod.dim, a->proto());
  GORLAB_CHECK(x.dim() == a->dim() - ideal.dim(), "certificate ideal gives wrong dual size");
  std::vector<std::vector<K>> mx_gens;
  for (auto g : a->generator_indices())
    for (std::size_t t = 0; t < x.dim(); ++t)
      mx_gens.push_back(w_mod.act[g].apply(x.basis_vector(t)));
  auto mx = Subspace<K>::span_of(mx_gens, w_mod.dim, a->proto());
  for (std::size_t t = 0; t < x.dim(); ++t) {
    auto cand = x.basis_vector(t);
    if (!mx.contains(cand)) return cand;
  }
  throw internal_error("cyclic dual has no generator outside its radical");
}

template <class K>
Subspace<K> cyclic_span(const Module<K>& m, const std::vector<K>& w) {
  std::vector<std::vector<K>> gens;
  for (std::size_t i = 0; i < m.alg->dim(); ++i) gens.push_back(m.act[i].apply(w));
  return Subspace<K>::span_of(gens, m.dim, m.proto());
}

template <class K>
WagResult<K> wag_finish(const AlgebraPtr<K>& a, const Module<K>& w_mod,
                        const Subspace<K>& ideal, const std::vector<K>& w) {
  auto rw = cyclic_span(w_mod, w);
  GORLAB_CHECK(rw.contains(radical_submodule(w_mod)), "witness fails the containment R w >= m omega");
  WagResult<K> res;
  res.verdict = TriState::yes;
  res.ideal = ideal;
  res.w = w;
  return res;
}

inline bool is_finite_field(const Fq&) { return true; }
inline bool is_finite_field(const Rat&) { return false; }

}  // namespace detail

/// Searches for an exact sequence R -> omega -> k^n -> 0, i.e. w in omega
/// with R w containing m omega; equivalently an ideal I inside soc R with
/// R/I Gorenstein.  Over a finite field the ideal search is exhaustive, so
/// "no" is definitive; over the rationals failed random trials give
/// "unknown".  Only socle subspaces of codimension <= 1 in soc R can give
/// Gorenstein quotients (soc R / I embeds into soc(R/I)), so the
/// enumeration visits exactly those layers.
template <class K>
WagResult<K> wag_search(const AlgebraPtr<K>& a, const WagOptions& opt = {}) {
  auto w_mod = canonical_module(a);
  auto soc = socle(regular_module(a));
  const std::size_t r = soc.dim();

  if constexpr (std::is_same_v<K, Fq>) {
    const unsigned long long size = detail::pow_sat(a->proto().order(), r);
    if (size > opt.enumeration_cap)
      throw capacity_error("weakly-almost-Gorenstein socle enumeration", size,
                           opt.enumeration_cap);
    WagResult<K> found;
    bool have = false;
    for (std::size_t k : {r >= 1 ? r - 1 : 0, r}) {
      for_each_subspace(r, k, a->proto(), [&](const Matrix<Fq>& rows) {
        std::vector<std::vector<Fq>> lifted;
        for (std::size_t i = 0; i < rows.rows(); ++i)
          lifted.push_back(soc.from_coords(rows.row(i)));
        auto ideal = Subspace<Fq>::span_of(lifted, a->dim(), a->proto());
        if (detail::quotient_socle_dim(*a, ideal) != 1) return false;
        auto w = detail::wag_witness_from_ideal(a, w_mod, ideal);
        found = detail::wag_finish(a, w_mod, ideal, w);
        have = true;
        return true;
      });
      if (have) return found;
      if (r == 0) break;
    }
    WagResult<K> res;
    res.verdict = TriState::no;
    res.note = "exhausted all admissible socle subspaces";
    return res;
  } else {
    auto m_omega = radical_submodule(w_mod);
    std::mt19937_64 rng(opt.seed);
    for (std::size_t t = 0; t < opt.rational_trials; ++t) {
      std::vector<K> w;
      w.reserve(w_mod.dim);
      for (std::size_t i = 0; i < w_mod.dim; ++i)
        w.push_back(detail::random_coeff(a->proto(), rng));
      if (m_omega.contains(w)) continue;
      auto rw = detail::cyclic_span(w_mod, w);
      if (!rw.contains(m_omega)) continue;
      auto ideal = annihilator_of_elements(w_mod, {w});
      GORLAB_CHECK(socle(regular_module(a)).contains(ideal),
                   "witness annihilator escapes the socle");
      return detail::wag_finish(a, w_mod, ideal, w);
    }
    WagResult<K> res;
    res.verdict = TriState::unknown;
    res.note = "randomized search over the rationals found no witness in " +
               std::to_string(opt.rational_trials) + " trials";
    return res;
  }
}

template <class K>
struct SvResult {
  SvState verdict = SvState::skipped;
  std::string detail;
  std::optional<Subspace<K>> witness_ideal;  // on "no"
};

/// 0:(0:I) <= I:m for every ideal I, by exhaustive enumeration of
/// action-invariant subspaces.  Runs only when every dimension layer fits
/// under the cap; otherwise reports skipped.
template <class K>
SvResult<K> sv_almost_gorenstein(const AlgebraPtr<K>& a,
                                 unsigned long long layer_cap = 1ull << 12) {
  SvResult<K> res;
  if constexpr (!std::is_same_v<K, Fq>) {
    res.detail = "ideal enumeration needs a finite field";
    return res;
  } else {
    const std::size_t d = a->dim();
    const unsigned long long q = a->proto().order();
    for (std::size_t k = 0; k <= d; ++k) {
      unsigned long long layer = gaussian_binomial(d, k, q);
      if (layer > layer_cap) {
        res.detail = "layer of " + std::to_string(k) + "-dim subspaces has " +
                     std::to_string(layer) + " members > cap " + std::to_string(layer_cap);
        return res;
      }
    }
    auto reg = regular_module(a);
    const auto& gens = a->generator_indices();
    for (std::size_t k = 0; k <= d; ++k) {
      bool stop = for_each_subspace(d, k, a->proto(), [&](const Matrix<Fq>& rows) {
        auto sub = Subspace<Fq>::span(rows);
        for (auto g : gens)
          for (std::size_t i = 0; i < sub.dim(); ++i)
            if (!sub.contains(a->lmul(g).apply(sub.basis_vector(i)))) return false;
        // I is an ideal; check 0:(0:I) <= I:m
        std::vector<std::vector<Fq>> ibasis;
        for (std::size_t i = 0; i < sub.dim(); ++i) ibasis.push_back(sub.basis_vector(i));
        auto zero_colon_i = annihilator_of_elements(reg, ibasis);
        std::vector<std::vector<Fq>> jbasis;
        for (std::size_t i = 0; i < zero_colon_i.dim(); ++i)
          jbasis.push_back(zero_colon_i.basis_vector(i));
        auto double_ann = annihilator_of_elements(reg, jbasis);
        // I:m = {v : g v in I for all generators g}
        auto rep = sub.complement_indices();
        std::vector<Matrix<Fq>> mats;
        for (auto g : gens) {
          Matrix<Fq> pm(rep.size(), d, a->proto());
          for (std::size_t c = 0; c < d; ++c) {
            auto red = sub.reduce(a->lmul(g).col(c));
            for (std::size_t rr = 0; rr < rep.size(); ++rr) pm.at(rr, c) = red[rep[rr]];
          }
          mats.push_back(std::move(pm));
        }
        auto colon_m = kernel_intersection(mats, d, a->proto());
        if (!colon_m.contains(double_ann)) {
          res.verdict = SvState::no;
          res.witness_ideal = sub;
          res.detail = "ideal of dim " + std::to_string(k) + " violates 0:(0:I) <= I:m";
          return true;
        }
        return false;
      });
      if (stop) return res;
    }
    res.verdict = SvState::yes;
    return res;
  }
}

/// m / soc R compared with its canonical dual Hom(m/soc R, omega).
template <class K>
IsoResult<K> max_ideal_self_dual(const AlgebraPtr<K>& a, const IsoOptions& iso_opt = {}) {
  auto reg = regular_module(a);
  auto soc = socle(reg);
  auto msub = submodule_from_subspace(reg, a->max_ideal());
  // socle inside the coordinates of m (soc <= m whenever dim R > 1)
  std::vector<std::vector<K>> soc_in_m;
  for (std::size_t i = 0; i < soc.dim(); ++i) {
    auto c = msub.space.coords(soc.basis_vector(i));
    if (!c.has_value()) continue;  // dim R = 1: soc = R not inside m = 0
    soc_in_m.push_back(*c);
  }
  auto socm = Subspace<K>::span_of(soc_in_m, msub.mod.dim, a->proto());
  auto x = quotient_module(msub.mod, socm).mod;
  auto xd = hom_module(x, canonical_module(a)).mod;
  return module_isomorphic(x, xd, iso_opt);
}

struct ExtensionPass {
  std::uint8_t degree = 1;
  TriState wag = TriState::unknown;
  TriState misd = TriState::unknown;
  std::string note;
};

struct ClassifyOptions {
  WagOptions wag;
  unsigned long long sv_layer_cap = 1ull << 12;
  IsoOptions iso;
  std::vector<std::uint8_t> ext_degrees;  // re-run WAG and self-duality over F_{q^s}
};

template <class K>
struct ClassifyOutcome {
  std::size_t dim = 0, edim = 0, type = 0, residue = 0;
  TriState gorenstein = TriState::unknown;
  TriState nearly_gorenstein = TriState::unknown;
  TriState wag = TriState::unknown;
  TriState misd = TriState::unknown;
  SvState sv = SvState::skipped;
  TriState soc_quotient_gorenstein = TriState::unknown;
  Subspace<K> trace;
  std::optional<Subspace<K>> wag_ideal;
  std::optional<std::vector<K>> wag_w;
  std::string sv_detail, wag_note, misd_witness;
  std::vector<ExtensionPass> ext_passes;
};

template <class K>
ClassifyOutcome<K> classify(const AlgebraPtr<K>& a, const ClassifyOptions& opt = {}) {
  ClassifyOutcome<K> out;
  out.dim = a->dim();
  out.edim = a->edim();
  auto reg = regular_module(a);
  auto soc = socle(reg);
  out.type = soc.dim();

  auto tr = trace_ideal_and_residue(a);
  out.trace = tr.trace;
  out.residue = tr.residue;
  out.gorenstein = (tr.residue == 0) ? TriState::yes : TriState::no;
  GORLAB_CHECK((out.type == 1) == (out.gorenstein == TriState::yes),
               "type and residue disagree about Gorensteinness");
  bool ng = tr.trace.contains(a->max_ideal());
  GORLAB_CHECK(ng == (tr.residue <= 1), "trace containment and residue disagree");
  out.nearly_gorenstein = ng ? TriState::yes : TriState::no;

  auto wag = wag_search(a, opt.wag);
  out.wag = wag.verdict;
  out.wag_ideal = wag.ideal;
  out.wag_w = wag.w;
  out.wag_note = wag.note;

  auto sv = sv_almost_gorenstein(a, opt.sv_layer_cap);
  out.sv = sv.verdict;
  out.sv_detail = sv.detail;

  if (a->dim() == 1) {
    out.soc_quotient_gorenstein = TriState::yes;
  } else {
    auto q = quotient_algebra(a, soc);
    out.soc_quotient_gorenstein =
        socle(regular_module(q)).dim() == 1 ? TriState::yes : TriState::no;
  }

  auto misd = max_ideal_self_dual(a, opt.iso);
  out.misd = tri_of(misd.verdict);
  out.misd_witness = misd.witness;

  if constexpr (std::is_same_v<K, Fq>) {
    for (auto s : opt.ext_degrees) {
      if (s <= 1 || a->proto().deg() != 1) continue;
      ExtensionPass pass;
      pass.degree = s;
      auto ax = extend_algebra(a, s);
      try {
        pass.wag = wag_search(ax, opt.wag).verdict;
      } catch (const capacity_error& e) {
        pass.note = e.what();
      }
      pass.misd = tri_of(max_ideal_self_dual(ax, opt.iso).verdict);
      out.ext_passes.push_back(pass);
    }
  }
  return out;
}

/// Shape report for ideals of the form (x1^p) + n (x2, ..., xn): detects
/// the shape among the minimal monomial generators and, when present,
/// checks type = n and that R/soc R is Gorenstein.
struct L57Report {
  bool has_shape = false;
  std::size_t main_var = 0;
  std::uint32_t power = 0;
  std::size_t nvars = 0;
  std::size_t type = 0;
  bool soc_quotient_gorenstein = false;
  bool asserts_ok = true;  // has_shape implies (type == nvars && soc quotient Gorenstein)
};

template <class K>
L57Report l57_family_check(const AlgebraPtr<K>& a) {
  const auto& mono = a->monomial_presentation();
  if (!mono) throw error("shape check needs a monomial-quotient presentation");
  L57Report rep;
  const std::size_t n = mono->vars.size();
  rep.nvars = n;
  rep.type = socle(regular_module(a)).dim();
  if (a->dim() == 1) {
    rep.soc_quotient_gorenstein = true;
  } else {
    auto q = quotient_algebra(a, socle(regular_module(a)));
    rep.soc_quotient_gorenstein = socle(regular_module(q)).dim() == 1;
  }

  auto gens = mono->ideal_gens;  // already minimal
  for (std::size_t main = 0; main < n && !rep.has_shape; ++main) {
    std::uint32_t p = 0;
    for (const auto& g : gens) {
      bool pure = g[main] > 0;
      for (std::size_t v = 0; v < n && pure; ++v)
        if (v != main && g[v] > 0) pure = false;
      if (pure) p = g[main];
    }
    if (p < 2) continue;
    std::vector<Monomial> expected;
    Monomial pw(n, 0);
    pw[main] = p;
    expected.push_back(pw);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = j; l < n; ++l) {
        if (j == main && l == main) continue;
        Monomial m2(n, 0);
        ++m2[j];
        ++m2[l];
        expected.push_back(m2);
      }
    expected = minimalize_monomial_gens(expected);
    if (expected == gens) {
      rep.has_shape = true;
      rep.main_var = main;
      rep.power = p;
    }
  }
  if (rep.has_shape)
    rep.asserts_ok = (rep.type == n) && rep.soc_quotient_gorenstein;
  return rep;
}

}  // namespace gorlab
