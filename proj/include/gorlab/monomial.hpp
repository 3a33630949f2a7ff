#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gorlab/common.hpp"

namespace gorlab {

/// Monomial in a fixed variable list, as an exponent vector.
using Monomial = std::vector<std::uint32_t>;

inline std::uint32_t total_degree(const Monomial& m) {
  std::uint32_t d = 0;
  for (auto e : m) d += e;
  return d;
}

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

/// Graded order: total degree first, then exponent vector descending
/// (so x comes before y within a degree).
inline bool grlex_less(const Monomial& a, const Monomial& b) {
  std::uint32_t da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a > b;
}

inline bool is_valid_var_name(const std::string& s) {
  if (s.empty() || (std::isdigit(static_cast<unsigned char>(s[0])))) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

/// Parses "x^2*y" against a variable list.  "1" denotes the unit monomial.
inline Monomial parse_monomial(const std::vector<std::string>& vars, const std::string& text) {
  Monomial m(vars.size(), 0);
  if (text == "1") return m;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t star = text.find('*', pos);
    std::string factor = text.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
    pos = star == std::string::npos ? text.size() : star + 1;
    if (factor.empty()) throw parse_error("empty factor in monomial '" + text + "'");
    std::size_t caret = factor.find('^');
    std::string name = factor.substr(0, caret);
    std::uint64_t exp = 1;
    if (caret != std::string::npos) {
      std::string es = factor.substr(caret + 1);
      try {
        exp = std::stoull(es);
      } catch (const std::exception&) {
        throw parse_error("bad exponent '" + es + "' in monomial '" + text + "'");
      }
      if (exp == 0 || exp > 1000000) throw parse_error("exponent out of range in '" + text + "'");
    }
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw parse_error("unknown variable '" + name + "' in monomial '" + text + "'");
    m[static_cast<std::size_t>(it - vars.begin())] += static_cast<std::uint32_t>(exp);
  }
  return m;
}

inline std::string print_monomial(const std::vector<std::string>& vars, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

/// Removes generators divisible by another generator; sorts graded-lex.
inline std::vector<Monomial> minimalize_monomial_gens(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), grlex_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

inline bool in_monomial_ideal(const std::vector<Monomial>& gens, const Monomial& m) {
  for (const auto& g : gens)
    if (divides(g, m)) return true;
  return false;
}

/// Standard monomials of a zero-dimensional monomial ideal, sorted graded-lex.
/// Requires a pure power of every variable among the generators.
inline std::vector<Monomial> standard_monomials(std::size_t nvars,
                                                const std::vector<Monomial>& gens,
                                                std::size_t dim_cap) {
  std::vector<std::uint32_t> bound(nvars, 0);
  for (std::size_t v = 0; v < nvars; ++v) {
    for (const auto& g : gens) {
      bool pure = g[v] > 0;
      for (std::size_t w = 0; w < nvars && pure; ++w)
        if (w != v && g[w] > 0) pure = false;
      if (pure && (bound[v] == 0 || g[v] < bound[v])) bound[v] = g[v];
    }
    if (bound[v] == 0)
      throw error("ideal is not zero-dimensional: no pure power of variable index " +
                  std::to_string(v));
  }
  std::uint64_t box = 1;
  for (auto b : bound) {
    box *= b;
    if (box > dim_cap * 64ull) throw capacity_error("standard monomial enumeration", box, dim_cap * 64ull);
  }
  std::vector<Monomial> basis;
  Monomial cur(nvars, 0);
  while (true) {
    if (!in_monomial_ideal(gens, cur)) {
      basis.push_back(cur);
      if (basis.size() > dim_cap) throw capacity_error("quotient dimension", basis.size(), dim_cap);
    }
    std::size_t v = 0;
    while (v < nvars) {
      if (++cur[v] < bound[v]) break;
      cur[v] = 0;
      ++v;
    }
    if (v == nvars) break;
  }
  std::sort(basis.begin(), basis.end(), grlex_less);
  return basis;
}

}  // namespace gorlab
