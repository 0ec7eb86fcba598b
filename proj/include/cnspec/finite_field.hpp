#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cnspec/error.hpp"

namespace cnspec {

inline bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

/// GF(p^n) described by a monic irreducible modulus over Z_p. The modulus is
/// stored constant term first and has n + 1 coefficients (the last is 1).
struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t n = 1;
  std::vector<std::uint32_t> modulus;

  std::uint32_t order() const {
    std::uint32_t q = 1;
    for (std::uint32_t i = 0; i < n; ++i) q *= p;
    return q;
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Residue class of a polynomial of degree < n, constant term first.
struct FieldElement {
  std::vector<std::uint32_t> coeffs;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

namespace detail {

using Poly = std::vector<std::uint32_t>;  // constant term first, no trailing zeros

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t p) {
  // a^(p-2) mod p
  std::uint64_t result = 1, base = a % p;
  std::uint32_t e = p - 2;
  while (e > 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

/// Remainder of f modulo a monic g over Z_p.
inline Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint32_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + static_cast<std::uint64_t>(p - lead) * g[i]) % p);
    }
    trim(f);
  }
  return f;
}

/// Enumerates monic polynomials of the given degree, lower coefficients in
/// lexicographic order with the constant term most significant.
inline Poly monic_from_counter(std::uint64_t counter, std::uint32_t degree, std::uint32_t p) {
  Poly f(degree + 1, 0);
  for (std::uint32_t i = degree; i-- > 0;) {
    f[i] = static_cast<std::uint32_t>(counter % p);
    counter /= p;
  }
  f[degree] = 1;
  return f;
}

inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t n = static_cast<std::uint32_t>(f.size() - 1);
  if (n <= 1) return true;
  for (std::uint32_t d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      if (poly_mod(f, monic_from_counter(c, d, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Builds GF(p^n) with the lexicographically smallest monic irreducible
/// modulus (coefficients compared constant term first).
inline FieldSpec field_create(std::uint32_t p, std::uint32_t n) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
  if (n < 1) throw Error(ErrorKind::InvalidParams, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > (1U << 16)) throw Error(ErrorKind::TooLarge, "field order exceeds 2^16");
  }
  std::uint64_t candidates = q;  // p^n monic polynomials of degree n
  for (std::uint64_t c = 0; c < candidates; ++c) {
    auto f = detail::monic_from_counter(c, n, p);
    if (detail::is_irreducible(f, p)) return FieldSpec{p, n, f};
  }
  throw Error(ErrorKind::InvalidParams, "no irreducible polynomial found");  // unreachable
}

inline FieldElement field_zero(const FieldSpec& f) { return FieldElement{std::vector<std::uint32_t>(f.n, 0)}; }

inline FieldElement field_one(const FieldSpec& f) {
  auto e = field_zero(f);
  e.coeffs[0] = 1;
  return e;
}

/// The class of x. In GF(p) this is the constant 0 (x is the modulus).
inline FieldElement field_generator(const FieldSpec& f) {
  auto e = field_zero(f);
  if (f.n > 1) {
    e.coeffs[1] = 1;
  }
  return e;
}

inline bool is_valid(const FieldSpec& f, const FieldElement& x) {
  if (x.coeffs.size() != f.n) return false;
  for (auto c : x.coeffs) {
    if (c >= f.p) return false;
  }
  return true;
}

/// Base-p integer encoding, constant term least significant.
inline std::uint32_t to_index(const FieldSpec& f, const FieldElement& x) {
  std::uint32_t idx = 0;
  for (std::uint32_t i = f.n; i-- > 0;) idx = idx * f.p + x.coeffs[i];
  return idx;
}

inline FieldElement from_index(const FieldSpec& f, std::uint32_t idx) {
  auto e = field_zero(f);
  for (std::uint32_t i = 0; i < f.n; ++i) {
    e.coeffs[i] = idx % f.p;
    idx /= f.p;
  }
  return e;
}

inline FieldElement field_add(const FieldSpec& f, const FieldElement& a, const FieldElement& b) {
  auto r = field_zero(f);
  for (std::uint32_t i = 0; i < f.n; ++i) r.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % f.p;
  return r;
}

inline FieldElement field_neg(const FieldSpec& f, const FieldElement& a) {
  auto r = field_zero(f);
  for (std::uint32_t i = 0; i < f.n; ++i) r.coeffs[i] = (f.p - a.coeffs[i]) % f.p;
  return r;
}

inline FieldElement field_sub(const FieldSpec& f, const FieldElement& a, const FieldElement& b) {
  return field_add(f, a, field_neg(f, b));
}

inline FieldElement field_mul(const FieldSpec& f, const FieldElement& a, const FieldElement& b) {
  detail::Poly prod(2 * f.n, 0);
  for (std::uint32_t i = 0; i < f.n; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::uint32_t j = 0; j < f.n; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(a.coeffs[i]) * b.coeffs[j]) % f.p);
    }
  }
  auto rem = detail::poly_mod(std::move(prod), f.modulus, f.p);
  auto r = field_zero(f);
  for (std::size_t i = 0; i < rem.size(); ++i) r.coeffs[i] = rem[i];
  return r;
}

inline FieldElement field_pow(const FieldSpec& f, FieldElement base, std::uint64_t e) {
  auto result = field_one(f);
  while (e > 0) {
    if (e & 1U) result = field_mul(f, result, base);
    base = field_mul(f, base, base);
    e >>= 1;
  }
  return result;
}

/// Multiplicative inverse via x^(q-2).
inline FieldElement field_inv(const FieldSpec& f, const FieldElement& a) {
  if (a == field_zero(f)) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return field_pow(f, a, static_cast<std::uint64_t>(f.order()) - 2);
}

/// x -> x^p.
inline FieldElement frobenius(const FieldSpec& f, const FieldElement& x) { return field_pow(f, x, f.p); }

/// Addition and multiplication tables over the index encoding. Group
/// constructions work on these so that a 2x2 matrix product costs a handful
/// of lookups.
class FieldTables {
 public:
  explicit FieldTables(FieldSpec spec) : spec_(std::move(spec)), q_(spec_.order()) {
    add_.resize(static_cast<std::size_t>(q_) * q_);
    mul_.resize(static_cast<std::size_t>(q_) * q_);
    std::vector<FieldElement> elems;
    elems.reserve(q_);
    for (std::uint32_t i = 0; i < q_; ++i) elems.push_back(from_index(spec_, i));
    for (std::uint32_t i = 0; i < q_; ++i) {
      for (std::uint32_t j = 0; j < q_; ++j) {
        add_[i * q_ + j] = to_index(spec_, field_add(spec_, elems[i], elems[j]));
        mul_[i * q_ + j] = to_index(spec_, field_mul(spec_, elems[i], elems[j]));
      }
    }
    frob_.resize(q_);
    for (std::uint32_t i = 0; i < q_; ++i) frob_[i] = to_index(spec_, cnspec::frobenius(spec_, elems[i]));
  }

  const FieldSpec& spec() const noexcept { return spec_; }
  std::uint32_t order() const noexcept { return q_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  std::uint32_t neg(std::uint32_t a) const {
    for (std::uint32_t b = 0; b < q_; ++b) {
      if (add(a, b) == 0) return b;
    }
    return 0;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t frobenius(std::uint32_t a) const { return frob_[a]; }

 private:
  FieldSpec spec_;
  std::uint32_t q_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> frob_;
};

}  // namespace cnspec
