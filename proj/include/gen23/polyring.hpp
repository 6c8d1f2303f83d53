#pragma once

// Integer, finite-field and bivariate integer polynomials: exact resultants,
// factorization over Z and GF(q), and a plain-text / JSON exchange format.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gen23/field.hpp"
#include "gen23/poly.hpp"
#include "gen23/report.hpp"
#include "json.hpp"

namespace gen23 {

using BigInt = boost::multiprecision::cpp_int;

struct IntRing {
  using value_type = BigInt;
  BigInt zero() const { return 0; }
  BigInt one() const { return 1; }
  BigInt from_int(long long v) const { return v; }
  BigInt add(const BigInt& a, const BigInt& b) const { return a + b; }
  BigInt sub(const BigInt& a, const BigInt& b) const { return a - b; }
  BigInt neg(const BigInt& a) const { return -a; }
  BigInt mul(const BigInt& a, const BigInt& b) const { return a * b; }
  /// Exact quotient; throws if b does not divide a.
  BigInt divexact(const BigInt& a, const BigInt& b) const;
  bool is_zero(const BigInt& a) const { return a == 0; }
  bool eq(const BigInt& a, const BigInt& b) const { return a == b; }
  bool operator==(const IntRing&) const = default;
};

using IntPoly = Poly<IntRing>;
using FieldPoly = Poly<FieldRing>;

IntPoly int_poly(std::initializer_list<long long> coeffs);

/// Exact quotient a / b in Z[t], or nullopt if b does not divide a.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);

BigInt content(const IntPoly& f);
/// f / content(f), normalized to a positive leading coefficient.
IntPoly primitive_part(const IntPoly& f);
/// Primitive gcd in Z[t] with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Ring policy whose values are integer polynomials; used as the coefficient
/// ring of a bivariate polynomial viewed in its eliminated variable.
struct IntPolyRing {
  using value_type = IntPoly;
  IntPoly zero() const { return IntPoly(); }
  IntPoly one() const { return IntPoly::constant(IntRing{}, 1); }
  IntPoly from_int(long long v) const { return IntPoly::constant(IntRing{}, v); }
  IntPoly add(const IntPoly& a, const IntPoly& b) const { return a + b; }
  IntPoly sub(const IntPoly& a, const IntPoly& b) const { return a - b; }
  IntPoly neg(const IntPoly& a) const { return -a; }
  IntPoly mul(const IntPoly& a, const IntPoly& b) const { return a * b; }
  IntPoly divexact(const IntPoly& a, const IntPoly& b) const;
  bool is_zero(const IntPoly& a) const { return a.is_zero(); }
  bool eq(const IntPoly& a, const IntPoly& b) const { return a == b; }
  bool operator==(const IntPolyRing&) const = default;
};

/// Polynomial in two named variables with integer coefficients.
class BivarPoly {
 public:
  using Exponents = std::pair<int, int>;

  BivarPoly(std::string var0 = "a", std::string var1 = "b") : vars_{std::move(var0), std::move(var1)} {}

  /// Parses sums of terms like "-3*a^2*b + b^3 - 1".
  static BivarPoly parse(std::string_view text, std::string var0 = "a", std::string var1 = "b");

  const std::string& var(int i) const { return vars_[i]; }
  const std::map<Exponents, BigInt>& terms() const { return terms_; }
  void add_term(int e0, int e1, const BigInt& c);
  bool is_zero() const { return terms_.empty(); }
  int degree_in(int var) const;
  int var_index(std::string_view name) const;

  /// Coefficients in variable `var` as polynomials in the other one.
  Poly<IntPolyRing> as_poly_in(int var) const;

  std::string to_string() const;

 private:
  std::string vars_[2];
  std::map<Exponents, BigInt> terms_;
};

/// Sylvester resultant eliminating the named variable, as a polynomial in the
/// other. Throws if both inputs are constant in that variable.
IntPoly resultant(const BivarPoly& f, const BivarPoly& g, std::string_view eliminate);

/// Univariate resultant over Z (Sylvester / Bareiss).
BigInt resultant(const IntPoly& f, const IntPoly& g);

struct IntFactorization {
  BigInt unit;  // signed content
  std::vector<FactorTerm<IntRing>> factors;  // primitive, positive leading coefficient
};

/// Complete factorization over Z (desk scale). Throws on the zero polynomial.
IntFactorization factorize(const IntPoly& f);

/// Complete factorization over GF(q) into monic irreducibles.
std::vector<FactorTerm<FieldRing>> factorize(const FieldPoly& f);

/// Monic gcd and whether it is constant. Throws if both inputs are zero.
std::pair<FieldPoly, bool> gcd_coprime(const FieldPoly& f, const FieldPoly& g);

/// Image of f under Z -> GF(p) -> field.
FieldPoly reduce_mod(const IntPoly& f, const Field& field);
BigInt symmetric_residue(const BigInt& a, const BigInt& m);

/// Reduces f mod p, finds the smallest GF(p^d) over which it splits into
/// linear factors, and reports whether GF(p^d) has an element of order
/// k / gcd(k, p).
ClaimReport splitting_order_check(const IntPoly& f, u64 p, u64 k = 21);

// Text: "c0 + c1*t + c2*t^2" (low degree first). Extension-field coefficients
// are written as parenthesized coordinate lists, e.g. "(1,2)*t".
std::string to_string(const IntPoly& f, std::string_view var = "t");
std::string to_string(const FieldPoly& f, std::string_view var = "t");
IntPoly parse_int_poly(std::string_view text, std::string_view var = "t");
FieldPoly parse_field_poly(const Field& field, std::string_view text, std::string_view var = "t");

// JSON: coefficient arrays, low degree first. Integers that overflow int64
// are written as decimal strings; field coefficients use Field::format.
nlohmann::json to_json(const IntPoly& f);
nlohmann::json to_json(const FieldPoly& f);
IntPoly int_poly_from_json(const nlohmann::json& j);
FieldPoly field_poly_from_json(const Field& field, const nlohmann::json& j);

}  // namespace gen23
