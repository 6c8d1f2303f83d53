#pragma once

// Dense square matrices over a finite field, treated as group elements, with
// the linear algebra the rest of the toolkit needs (rank, null spaces).

#include <initializer_list>
#include <optional>
#include <vector>

#include "gen23/field.hpp"
#include "gen23/polyring.hpp"
#include "json.hpp"

namespace gen23 {

using Vec = std::vector<Elem>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, int n) : f_(std::move(f)), n_(n), a_(static_cast<std::size_t>(n * n), Elem{0}) {}

  static Matrix identity(const Field& f, int n) { return scalar(f, n, f.one()); }
  static Matrix scalar(const Field& f, int n, Elem s);
  /// Entries given as integers (mapped through the prime field).
  static Matrix from_ints(const Field& f, std::initializer_list<std::initializer_list<long long>> rows);
  static Matrix from_rows(const Field& f, const std::vector<Vec>& rows);

  const Field& field() const { return f_; }
  int n() const { return n_; }
  Elem operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  Elem& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  const std::vector<Elem>& data() const { return a_; }
  Vec row(int i) const { return Vec(a_.begin() + i * n_, a_.begin() + (i + 1) * n_); }
  Vec col(int j) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  Vec operator*(const Vec& v) const;
  Matrix scaled(Elem s) const;
  Matrix transpose() const;
  /// Entrywise a -> a^(p^d).
  Matrix frobenius(int d = 1) const;
  /// Entrywise a -> a^sqrt(q).
  Matrix sigma() const;

  Elem det() const;
  int rank() const;
  bool invertible() const { return det() != f_.zero(); }
  /// Throws std::domain_error if singular.
  Matrix inverse() const;
  Matrix pow(long long e) const;

  bool is_identity() const;
  /// Scalar value if M = sI.
  std::optional<Elem> scalar_value() const;
  bool is_scalar() const { return scalar_value().has_value(); }

  friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.a_ == b.a_ && a.f_ == b.f_; }

 private:
  Field f_;
  int n_ = 0;
  std::vector<Elem> a_;
};

/// x^-1 y^-1 x y.
Matrix commutator(const Matrix& x, const Matrix& y);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> row_reduce(const Field& f, std::vector<Vec>& rows);
/// Basis of {v : rows * v = 0}.
std::vector<Vec> nullspace(const Field& f, std::vector<Vec> rows, int ncols);
int rank(const Field& f, std::vector<Vec> rows);
bool in_span(const Field& f, const std::vector<Vec>& basis, const Vec& v);

/// det(tI - M).
FieldPoly charpoly(const Matrix& m);
FieldPoly minpoly(const Matrix& m);

/// Multiplicative order from the factored minimal polynomial; brute force up
/// to `cap` steps only if the fast path cannot represent the bound. nullopt
/// when the order exceeds the cap. Throws on singular input.
std::optional<u64> element_order(const Matrix& m, u64 cap = u64{1} << 24);
/// Repeated multiplication; the test oracle.
std::optional<u64> element_order_brute(const Matrix& m, u64 cap = u64{1} << 24);
/// Smallest k with M^k scalar. Throws on singular input.
u64 projective_order(const Matrix& m);

/// Nonconstant similarity invariants d1 | d2 | ..., monic, from the Smith form
/// of tI - M. Their product is the characteristic polynomial.
std::vector<FieldPoly> invariant_factors(const Matrix& m);
/// Throws std::invalid_argument on dimension or field mismatch.
bool is_conjugate(const Matrix& a, const Matrix& b);

nlohmann::json to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

}  // namespace gen23
