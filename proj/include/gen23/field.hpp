#pragma once

// Finite fields GF(p^m) in a polynomial basis over GF(p), with table-driven
// arithmetic. An element is stored as a packed index: the base-p digits of the
// index are its coordinates, constant term in the least significant digit.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gen23/numtheory.hpp"

namespace gen23 {

struct Elem {
  std::uint32_t v = 0;
  auto operator<=>(const Elem&) const = default;
};

/// Subfield GF(p^d) of GF(p^m), d | m.
struct SubfieldDescriptor {
  u64 p = 0;
  int d = 0;
  u64 size = 0;
  bool operator==(const SubfieldDescriptor&) const = default;
};

class Field {
 public:
  static constexpr u64 kMaxOrder = u64{1} << 20;

  Field() = default;

  /// GF(p^m). Without a modulus, picks the lexicographically smallest monic
  /// irreducible of degree m, comparing coefficients from the constant term up.
  /// Throws std::invalid_argument on composite p, bad modulus, or q > kMaxOrder.
  static Field make(u64 p, int m, std::optional<std::vector<u64>> modulus = std::nullopt);

  /// "p", "p^m" or "p^m/c0,c1,...,cm" (modulus low degree first).
  static Field parse(std::string_view text);
  std::string to_string() const;

  bool valid() const { return impl_ != nullptr; }
  u64 p() const { return impl_->p; }
  int m() const { return impl_->m; }
  u64 q() const { return impl_->q; }
  const std::vector<std::uint32_t>& modulus() const { return impl_->modulus; }
  bool is_prime_field() const { return impl_->m == 1; }
  bool is_square_extension() const { return impl_->m % 2 == 0; }
  /// sqrt(q) for a square extension; throws otherwise.
  u64 sqrt_q() const;

  Elem zero() const { return {0}; }
  Elem one() const { return {1}; }
  Elem from_int(long long v) const;
  Elem from_index(u64 index) const;
  Elem from_coeffs(std::span<const u64> coeffs) const;
  std::vector<std::uint32_t> coeffs(Elem a) const;
  /// Class of t in GF(p)[t]/(modulus).
  Elem generator_t() const;
  /// Fixed primitive element (generator of the multiplicative group).
  Elem primitive() const { return exp(1); }

  std::string format(Elem a) const;
  Elem parse_element(std::string_view text) const;

  Elem add(Elem a, Elem b) const {
    const Impl& f = *impl_;
    switch (f.kind) {
      case Kind::Prime: {
        std::uint32_t s = a.v + b.v;
        return {s >= f.p ? static_cast<std::uint32_t>(s - f.p) : s};
      }
      case Kind::Binary:
        return {a.v ^ b.v};
      default:
        if (a.v == 0) return b;
        if (b.v == 0) return a;
        {
          std::uint32_t la = f.log[a.v], lb = f.log[b.v];
          std::uint32_t diff = lb >= la ? lb - la : lb + f.qm1 - la;
          std::uint32_t z = f.zech[diff];
          if (z == kNoLog) return {0};
          return {f.exp[la + z]};
        }
    }
  }
  Elem neg(Elem a) const { return {impl_->neg[a.v]}; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a.v == 0 || b.v == 0) return {0};
    const Impl& f = *impl_;
    return {f.exp[f.log[a.v] + f.log[b.v]]};
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long e) const;

  /// Discrete log w.r.t. primitive(); a != 0.
  u64 log(Elem a) const { return impl_->log[a.v]; }
  Elem exp(u64 k) const { return {impl_->exp[k % impl_->qm1]}; }

  /// a^(p^d).
  Elem frobenius(Elem a, int d = 1) const;
  /// a^sqrt(q): the involutory automorphism of a square extension.
  Elem sigma(Elem a) const;

  /// Multiplicative order via the prime divisors of q-1. Throws on zero.
  u64 order(Elem a) const;
  /// Degree over GF(p) of the minimal polynomial of a.
  int degree_over_prime(Elem a) const;
  SubfieldDescriptor subfield_generated(Elem a) const;

  /// Prime divisors of q-1 (cached).
  const Factorization& order_factorization() const { return impl_->qm1_factors; }

  /// All elements with multiplicative order exactly k (empty if k does not divide q-1).
  std::vector<Elem> elements_of_order(u64 k) const;

  friend bool operator==(const Field& a, const Field& b) {
    if (a.impl_ == b.impl_) return true;
    if (!a.impl_ || !b.impl_) return false;
    return a.impl_->p == b.impl_->p && a.impl_->m == b.impl_->m && a.impl_->modulus == b.impl_->modulus;
  }

 private:
  static constexpr std::uint32_t kNoLog = 0xffffffffu;
  enum class Kind { Prime, Binary, General };
  struct Impl {
    u64 p = 0;
    int m = 0;
    u64 q = 0;
    std::uint32_t qm1 = 0;
    Kind kind = Kind::Prime;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> exp;  // length 2(q-1)
    std::vector<std::uint32_t> log;  // length q
    std::vector<std::uint32_t> zech;  // log(1 + g^k), kNoLog when zero
    std::vector<std::uint32_t> neg;
    Factorization qm1_factors;
  };
  std::shared_ptr<const Impl> impl_;
};

/// An element bundled with its field, for parameter-level code.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(Field f, Elem e) : f_(std::move(f)), e_(e) {}

  const Field& field() const { return f_; }
  Elem elem() const { return e_; }
  std::vector<std::uint32_t> coeffs() const { return f_.coeffs(e_); }
  bool is_zero() const { return e_.v == 0; }
  std::string to_string() const { return f_.format(e_); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) { return {a.f_, a.f_.add(a.e_, b.e_)}; }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return {a.f_, a.f_.sub(a.e_, b.e_)}; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) { return {a.f_, a.f_.mul(a.e_, b.e_)}; }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return {a.f_, a.f_.div(a.e_, b.e_)}; }
  FieldElement operator-() const { return {f_, f_.neg(e_)}; }
  FieldElement pow(long long e) const { return {f_, f_.pow(e_, e)}; }
  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.e_ == b.e_ && a.f_ == b.f_; }

 private:
  Field f_;
  Elem e_;
};

/// Ring policy over a Field, for Poly<FieldRing>.
struct FieldRing {
  using value_type = Elem;
  Field field;

  Elem zero() const { return field.zero(); }
  Elem one() const { return field.one(); }
  Elem from_int(long long v) const { return field.from_int(v); }
  Elem add(Elem a, Elem b) const { return field.add(a, b); }
  Elem sub(Elem a, Elem b) const { return field.sub(a, b); }
  Elem neg(Elem a) const { return field.neg(a); }
  Elem mul(Elem a, Elem b) const { return field.mul(a, b); }
  Elem inv(Elem a) const { return field.inv(a); }
  Elem divexact(Elem a, Elem b) const { return field.div(a, b); }
  bool is_zero(Elem a) const { return a.v == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  u64 size() const { return field.q(); }
  u64 characteristic() const { return field.p(); }
  Elem pth_root(Elem a) const { return field.frobenius(a, field.m() - 1); }
  template <class Rng>
  Elem random(Rng& rng) const {
    return field.from_index(rng() % field.q());
  }
  friend bool operator==(const FieldRing& a, const FieldRing& b) { return a.field == b.field; }
};

/// Ring embedding src -> dst determined by the image of the class of t.
class FieldEmbedding {
 public:
  FieldEmbedding() = default;
  /// Finds an embedding (smallest-index root of src's modulus in dst). Throws
  /// if src is not a subfield of dst.
  static FieldEmbedding find(const Field& src, const Field& dst);

  const Field& source() const { return src_; }
  const Field& target() const { return dst_; }
  Elem operator()(Elem a) const;

 private:
  Field src_, dst_;
  std::vector<Elem> table_;
};

/// Smallest field GF(p^(m d)) over src containing an element of order k;
/// returns src itself when k | q-1.
Field extension_containing_order(const Field& src, u64 k);

}  // namespace gen23
