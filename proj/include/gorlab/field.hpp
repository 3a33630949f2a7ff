#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <random>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "gorlab/common.hpp"

namespace gorlab {

/// Exact scalar field: characteristic 0 means the rationals, otherwise a
/// prime p < 2^16.
struct FieldSpec {
  std::uint32_t characteristic = 0;

  bool is_rational() const { return characteristic == 0; }

  void validate() const {
    if (characteristic == 0) return;
    if (characteristic >= (1u << 16))
      throw error("field characteristic must be < 2^16, got " + std::to_string(characteristic));
    if (!is_prime(characteristic))
      throw error("field characteristic must be prime or 0, got " + std::to_string(characteristic));
  }

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }
};

namespace detail {

// Canonical irreducible monic polynomial of degree s over F_p, as the
// coefficient list of x^s - (red[s-1] x^{s-1} + ... + red[0]).  Chosen as
// the lexicographically smallest (high coefficient first) monic irreducible;
// for s in {2,3} irreducibility is equivalent to having no root.
inline std::array<std::uint16_t, 3> reduction_poly(std::uint16_t p, std::uint8_t deg) {
  static std::mutex mu;
  static std::map<std::pair<std::uint16_t, std::uint8_t>, std::array<std::uint16_t, 3>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({p, deg});
  if (it != cache.end()) return it->second;

  auto has_root = [p](std::uint64_t a0, std::uint64_t a1, std::uint64_t a2, int d) {
    for (std::uint64_t t = 0; t < p; ++t) {
      std::uint64_t v = a0 + a1 * t % p;
      std::uint64_t t2 = t * t % p;
      v += a2 * t2 % p;
      if (d == 2)
        v += t2;
      else
        v += t2 * t % p;
      if (v % p == 0) return true;
    }
    return false;
  };

  std::array<std::uint16_t, 3> red{0, 0, 0};
  bool found = false;
  if (deg == 2) {
    for (std::uint32_t a1 = 0; a1 < p && !found; ++a1)
      for (std::uint32_t a0 = 1; a0 < p && !found; ++a0)
        if (!has_root(a0, a1, 0, 2)) {
          // x^2 + a1 x + a0 irreducible; store negated tail.
          red = {static_cast<std::uint16_t>((p - a0) % p),
                 static_cast<std::uint16_t>((p - a1) % p), 0};
          found = true;
        }
  } else if (deg == 3) {
    for (std::uint32_t a2 = 0; a2 < p && !found; ++a2)
      for (std::uint32_t a1 = 0; a1 < p && !found; ++a1)
        for (std::uint32_t a0 = 1; a0 < p && !found; ++a0)
          if (!has_root(a0, a1, a2, 3)) {
            red = {static_cast<std::uint16_t>((p - a0) % p),
                   static_cast<std::uint16_t>((p - a1) % p),
                   static_cast<std::uint16_t>((p - a2) % p)};
            found = true;
          }
  }
  GORLAB_CHECK(found, "no irreducible polynomial found (bad degree?)");
  cache[{p, deg}] = red;
  return red;
}

}  // namespace detail

/// Element of a finite field F_{p^s} with p prime < 2^16 and s <= 3.
/// Stored as a polynomial in the canonical generator g, coefficients low
/// to high.  Every element carries its field; mixing fields throws.
class Fq {
 public:
  Fq() = default;

  Fq(std::uint16_t p, std::uint8_t deg, std::array<std::uint16_t, 3> c = {0, 0, 0})
      : p_(p), deg_(deg), c_(c) {
    GORLAB_CHECK(deg >= 1 && deg <= 3, "extension degree must be in 1..3");
    for (auto& x : c_) x = static_cast<std::uint16_t>(x % p_);
    for (int i = deg_; i < 3; ++i) GORLAB_CHECK(c_[i] == 0, "coefficient beyond degree");
  }

  static Fq zero(std::uint16_t p, std::uint8_t deg = 1) { return Fq(p, deg); }
  static Fq of(std::uint16_t p, std::uint64_t v) {
    return Fq(p, 1, {static_cast<std::uint16_t>(v % p), 0, 0});
  }

  std::uint16_t p() const { return p_; }
  std::uint8_t deg() const { return deg_; }
  const std::array<std::uint16_t, 3>& coeffs() const { return c_; }
  std::uint64_t order() const {
    std::uint64_t q = p_;
    for (int i = 1; i < deg_; ++i) q *= p_;
    return q;
  }

  Fq zero_like() const { return Fq(p_, deg_); }
  Fq one_like() const { return Fq(p_, deg_, {1, 0, 0}); }
  /// Same-field element with value v mod p (constant polynomial).
  Fq lift(std::uint64_t v) const {
    return Fq(p_, deg_, {static_cast<std::uint16_t>(v % p_), 0, 0});
  }
  /// The idx-th field element (base-p digits as coefficients); enumerates
  /// the whole field for idx in [0, p^deg).
  Fq from_index(std::uint64_t idx) const {
    Fq r = zero_like();
    for (int i = 0; i < deg_; ++i) {
      r.c_[i] = static_cast<std::uint16_t>(idx % p_);
      idx /= p_;
    }
    return r;
  }
  /// Re-reads a prime-field element in the degree-s extension of the same p.
  Fq extend(std::uint8_t deg) const {
    GORLAB_CHECK(deg_ == 1, "can only extend prime-field elements");
    return Fq(p_, deg, {c_[0], 0, 0});
  }

  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }

  friend bool operator==(const Fq& a, const Fq& b) {
    a.same_field(b);
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Fq& a, const Fq& b) { return !(a == b); }

  friend Fq operator+(const Fq& a, const Fq& b) {
    a.same_field(b);
    Fq r(a);
    for (int i = 0; i < a.deg_; ++i)
      r.c_[i] = static_cast<std::uint16_t>((a.c_[i] + b.c_[i]) % a.p_);
    return r;
  }
  friend Fq operator-(const Fq& a, const Fq& b) {
    a.same_field(b);
    Fq r(a);
    for (int i = 0; i < a.deg_; ++i)
      r.c_[i] = static_cast<std::uint16_t>((a.c_[i] + a.p_ - b.c_[i]) % a.p_);
    return r;
  }
  friend Fq operator-(const Fq& a) { return a.zero_like() - a; }

  friend Fq operator*(const Fq& a, const Fq& b) {
    a.same_field(b);
    const std::uint64_t p = a.p_;
    if (a.deg_ == 1) {
      Fq r(a);
      r.c_[0] = static_cast<std::uint16_t>(std::uint64_t(a.c_[0]) * b.c_[0] % p);
      return r;
    }
    std::array<std::uint64_t, 5> prod{};
    for (int i = 0; i < a.deg_; ++i)
      for (int j = 0; j < b.deg_; ++j) prod[i + j] += std::uint64_t(a.c_[i]) * b.c_[j] % p;
    auto red = detail::reduction_poly(a.p_, a.deg_);
    // g^deg = red[deg-1] g^{deg-1} + ... + red[0]
    for (int k = 2 * (a.deg_ - 1); k >= a.deg_; --k) {
      std::uint64_t v = prod[k] % p;
      if (v == 0) continue;
      prod[k] = 0;
      for (int i = 0; i < a.deg_; ++i) prod[k - a.deg_ + i] += v * red[i] % p;
    }
    Fq r(a);
    for (int i = 0; i < a.deg_; ++i) r.c_[i] = static_cast<std::uint16_t>(prod[i] % p);
    return r;
  }

  Fq& operator+=(const Fq& b) { return *this = *this + b; }
  Fq& operator-=(const Fq& b) { return *this = *this - b; }
  Fq& operator*=(const Fq& b) { return *this = *this * b; }

  Fq inv() const {
    if (is_zero()) throw error("division by zero in F_q");
    if (deg_ == 1) {
      // extended Euclid on integers.
      std::int64_t a = c_[0], m = p_, x0 = 0, x1 = 1, b = m;
      while (a > 1) {
        std::int64_t q = a / b;
        std::int64_t t = b;
        b = a % b;
        a = t;
        t = x0;
        x0 = x1 - q * x0;
        x1 = t;
      }
      std::int64_t v = x1 % m;
      if (v < 0) v += m;
      Fq r(*this);
      r.c_ = {static_cast<std::uint16_t>(v), 0, 0};
      return r;
    }
    return pow(order() - 2);
  }

  Fq pow(std::uint64_t e) const {
    Fq base = *this, acc = one_like();
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  friend Fq random_element(const Fq& like, std::mt19937_64& rng) {
    Fq r = like.zero_like();
    for (int i = 0; i < like.deg_; ++i)
      r.c_[i] = static_cast<std::uint16_t>(rng() % like.p_);
    return r;
  }

  std::string str() const {
    if (deg_ == 1) return std::to_string(c_[0]);
    std::string s = "[" + std::to_string(c_[0]);
    for (int i = 1; i < deg_; ++i) s += "," + std::to_string(c_[i]);
    return s + "]";
  }

 private:
  void same_field(const Fq& o) const {
    GORLAB_CHECK(p_ == o.p_ && deg_ == o.deg_, "mixed field arithmetic");
  }

  std::uint16_t p_ = 2;
  std::uint8_t deg_ = 1;
  std::array<std::uint16_t, 3> c_{0, 0, 0};
};

/// Rational number with exact arbitrary-precision arithmetic.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(static_cast<long>(n)) {}
  Rat(long n, long d) : v_(n, d) { v_.canonicalize(); }
  explicit Rat(const mpq_class& v) : v_(v) {}

  static Rat from_string(const std::string& s) {
    try {
      mpq_class v(s);
      v.canonicalize();
      return Rat(v);
    } catch (const std::invalid_argument&) {
      throw parse_error("bad rational literal '" + s + "'");
    }
  }

  Rat zero_like() const { return Rat(0); }
  Rat one_like() const { return Rat(1); }
  Rat lift(std::uint64_t v) const { return Rat(mpq_class(static_cast<unsigned long>(v))); }
  bool is_zero() const { return v_ == 0; }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }

  Rat& operator+=(const Rat& b) { v_ += b.v_; return *this; }
  Rat& operator-=(const Rat& b) { v_ -= b.v_; return *this; }
  Rat& operator*=(const Rat& b) { v_ *= b.v_; return *this; }

  Rat inv() const {
    if (is_zero()) throw error("division by zero in Q");
    return Rat(mpq_class(1 / v_));
  }

  const mpq_class& value() const { return v_; }
  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

template <class K>
std::string to_string(const K& k) {
  return k.str();
}

/// Parses a prime-field or rational scalar matching the exemplar's field.
inline Fq parse_scalar(const Fq& like, const std::string& s) {
  GORLAB_CHECK(like.deg() == 1, "extension-field literals are not supported in files");
  try {
    long long v = std::stoll(s);
    long long m = v % like.p();
    if (m < 0) m += like.p();
    return like.lift(static_cast<std::uint64_t>(m));
  } catch (const std::exception&) {
    throw parse_error("bad field element '" + s + "'");
  }
}

inline Rat parse_scalar(const Rat&, const std::string& s) { return Rat::from_string(s); }

}  // namespace gorlab
