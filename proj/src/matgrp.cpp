#include "gen23/matgrp.hpp"

#include <stdexcept>

namespace gen23 {

namespace {

void require_same(const Matrix& a, const Matrix& b) {
  if (a.n() != b.n() || !(a.field() == b.field())) throw std::invalid_argument("matrix dimension or field mismatch");
}

}  // namespace

Matrix Matrix::scalar(const Field& f, int n, Elem s) {
  Matrix m(f, n);
  for (int i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

Matrix Matrix::from_ints(const Field& f, std::initializer_list<std::initializer_list<long long>> rows) {
  const int n = static_cast<int>(rows.size());
  Matrix m(f, n);
  int i = 0;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n) throw std::invalid_argument("matrix must be square");
    int j = 0;
    for (long long v : r) m(i, j++) = f.from_int(v);
    ++i;
  }
  return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Vec>& rows) {
  const int n = static_cast<int>(rows.size());
  Matrix m(f, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) throw std::invalid_argument("matrix must be square");
    for (int j = 0; j < n; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

Vec Matrix::col(int j) const {
  Vec v(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) v[static_cast<std::size_t>(i)] = (*this)(i, j);
  return v;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same(a, b);
  const Field& f = a.f_;
  const int n = a.n_;
  Matrix r(f, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Elem aik = a(i, k);
      if (aik.v == 0) continue;
      for (int j = 0; j < n; ++j) r(i, j) = f.add(r(i, j), f.mul(aik, b(k, j)));
    }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same(a, b);
  Matrix r(a.f_, a.n_);
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.f_.add(a.a_[i], b.a_[i]);
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same(a, b);
  Matrix r(a.f_, a.n_);
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.f_.sub(a.a_[i], b.a_[i]);
  return r;
}

Vec Matrix::operator*(const Vec& v) const {
  Vec r(static_cast<std::size_t>(n_), f_.zero());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      r[static_cast<std::size_t>(i)] = f_.add(r[static_cast<std::size_t>(i)], f_.mul((*this)(i, j), v[static_cast<std::size_t>(j)]));
  return r;
}

Matrix Matrix::scaled(Elem s) const {
  Matrix r = *this;
  for (auto& e : r.a_) e = f_.mul(e, s);
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(f_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Matrix Matrix::frobenius(int d) const {
  Matrix r = *this;
  for (auto& e : r.a_) e = f_.frobenius(e, d);
  return r;
}

Matrix Matrix::sigma() const {
  Matrix r = *this;
  for (auto& e : r.a_) e = f_.sigma(e);
  return r;
}

Elem Matrix::det() const {
  std::vector<Vec> rows;
  for (int i = 0; i < n_; ++i) rows.push_back(row(i));
  Elem d = f_.one();
  for (int k = 0; k < n_; ++k) {
    int piv = k;
    while (piv < n_ && rows[static_cast<std::size_t>(piv)][static_cast<std::size_t>(k)] == f_.zero()) ++piv;
    if (piv == n_) return f_.zero();
    if (piv != k) {
      std::swap(rows[static_cast<std::size_t>(piv)], rows[static_cast<std::size_t>(k)]);
      d = f_.neg(d);
    }
    const Vec& rk = rows[static_cast<std::size_t>(k)];
    const Elem pk = rk[static_cast<std::size_t>(k)];
    d = f_.mul(d, pk);
    const Elem inv = f_.inv(pk);
    for (int i = k + 1; i < n_; ++i) {
      Vec& ri = rows[static_cast<std::size_t>(i)];
      const Elem c = f_.mul(ri[static_cast<std::size_t>(k)], inv);
      if (c == f_.zero()) continue;
      for (int j = k; j < n_; ++j) ri[static_cast<std::size_t>(j)] = f_.sub(ri[static_cast<std::size_t>(j)], f_.mul(c, rk[static_cast<std::size_t>(j)]));
    }
  }
  return d;
}

int Matrix::rank() const {
  std::vector<Vec> rows;
  for (int i = 0; i < n_; ++i) rows.push_back(row(i));
  return gen23::rank(f_, std::move(rows));
}

Matrix Matrix::inverse() const {
  const int n = n_;
  std::vector<Vec> aug;
  for (int i = 0; i < n; ++i) {
    Vec r = row(i);
    r.resize(static_cast<std::size_t>(2 * n), f_.zero());
    r[static_cast<std::size_t>(n + i)] = f_.one();
    aug.push_back(std::move(r));
  }
  auto piv = row_reduce(f_, aug);
  if (static_cast<int>(piv.size()) < n || piv[static_cast<std::size_t>(n - 1)] != n - 1)
    throw std::domain_error("matrix is singular");
  Matrix r(f_, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)];
  return r;
}

Matrix Matrix::pow(long long e) const {
  Matrix base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Matrix r = identity(f_, n_);
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

bool Matrix::is_identity() const {
  auto s = scalar_value();
  return s && *s == f_.one();
}

std::optional<Elem> Matrix::scalar_value() const {
  const Elem s = n_ ? (*this)(0, 0) : f_.one();
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if ((*this)(i, j) != (i == j ? s : f_.zero())) return std::nullopt;
  return s;
}

Matrix commutator(const Matrix& x, const Matrix& y) { return x.inverse() * y.inverse() * x * y; }

// ---------------------------------------------------------------------------

std::vector<int> row_reduce(const Field& f, std::vector<Vec>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const int ncols = static_cast<int>(rows[0].size());
  std::size_t r = 0;
  for (int c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][static_cast<std::size_t>(c)] == f.zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const Elem inv = f.inv(rows[r][static_cast<std::size_t>(c)]);
    for (auto& e : rows[r]) e = f.mul(e, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      const Elem k = rows[i][static_cast<std::size_t>(c)];
      if (k == f.zero()) continue;
      for (int j = c; j < ncols; ++j)
        rows[i][static_cast<std::size_t>(j)] = f.sub(rows[i][static_cast<std::size_t>(j)], f.mul(k, rows[r][static_cast<std::size_t>(j)]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<Vec> nullspace(const Field& f, std::vector<Vec> rows, int ncols) {
  auto piv = row_reduce(f, rows);
  std::vector<bool> is_piv(static_cast<std::size_t>(ncols), false);
  for (int c : piv) is_piv[static_cast<std::size_t>(c)] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_piv[static_cast<std::size_t>(free)]) continue;
    Vec v(static_cast<std::size_t>(ncols), f.zero());
    v[static_cast<std::size_t>(free)] = f.one();
    for (std::size_t i = 0; i < piv.size(); ++i)
      v[static_cast<std::size_t>(piv[i])] = f.neg(rows[i][static_cast<std::size_t>(free)]);
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(const Field& f, std::vector<Vec> rows) { return static_cast<int>(row_reduce(f, rows).size()); }

bool in_span(const Field& f, const std::vector<Vec>& basis, const Vec& v) {
  const int r = rank(f, basis);
  auto ext = basis;
  ext.push_back(v);
  return rank(f, std::move(ext)) == r;
}

// ---------------------------------------------------------------------------

FieldPoly charpoly(const Matrix& m) {
  const Field& f = m.field();
  const int n = m.n();
  const FieldRing R{f};
  // Reduce to upper Hessenberg form by similarity.
  std::vector<Vec> h;
  for (int i = 0; i < n; ++i) h.push_back(m.row(i));
  auto H = [&](int i, int j) -> Elem& { return h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  for (int c = 1; c < n - 1; ++c) {
    int i = c;
    while (i < n && H(i, c - 1) == f.zero()) ++i;
    if (i == n) continue;
    if (i != c) {
      std::swap(h[static_cast<std::size_t>(i)], h[static_cast<std::size_t>(c)]);
      for (int r = 0; r < n; ++r) std::swap(H(r, i), H(r, c));
    }
    const Elem inv = f.inv(H(c, c - 1));
    for (int r = c + 1; r < n; ++r) {
      const Elem u = f.mul(H(r, c - 1), inv);
      if (u == f.zero()) continue;
      for (int j = 0; j < n; ++j) H(r, j) = f.sub(H(r, j), f.mul(u, H(c, j)));
      for (int j = 0; j < n; ++j) H(j, c) = f.add(H(j, c), f.mul(u, H(j, r)));
    }
  }
  // p_k = (t - h_kk) p_{k-1} - sum_i (h_{k-1,k-2} ... h_{k-i+1,k-i}) h_{k-i,k} p_{k-i-1}
  std::vector<FieldPoly> p{FieldPoly::constant(R, f.one())};
  const auto t = FieldPoly::var(R);
  for (int k = 0; k < n; ++k) {
    FieldPoly pk = (t - FieldPoly::constant(R, H(k, k))) * p[static_cast<std::size_t>(k)];
    Elem prod = f.one();
    for (int i = 1; i <= k; ++i) {
      prod = f.mul(prod, H(k - i + 1, k - i));
      const Elem c = f.mul(prod, H(k - i, k));
      pk -= p[static_cast<std::size_t>(k - i)].scaled(c);
    }
    p.push_back(std::move(pk));
  }
  return p.back();
}

FieldPoly minpoly(const Matrix& m) {
  const Field& f = m.field();
  const int n = m.n();
  std::vector<Vec> powers;
  Matrix cur = Matrix::identity(f, n);
  for (int k = 0; k <= n; ++k) {
    powers.push_back(cur.data());
    // rows: n^2 equations in k+1 unknowns (coefficients of the relation)
    std::vector<Vec> eqs(static_cast<std::size_t>(n * n), Vec(static_cast<std::size_t>(k + 1)));
    for (int e = 0; e < n * n; ++e)
      for (int j = 0; j <= k; ++j) eqs[static_cast<std::size_t>(e)][static_cast<std::size_t>(j)] = powers[static_cast<std::size_t>(j)][static_cast<std::size_t>(e)];
    auto ns = nullspace(f, std::move(eqs), k + 1);
    if (!ns.empty()) return make_monic(FieldPoly(FieldRing{f}, ns[0]));
    cur = cur * m;
  }
  throw std::logic_error("minpoly: no relation found");
}

std::optional<u64> element_order_brute(const Matrix& m, u64 cap) {
  if (!m.invertible()) throw std::domain_error("element_order: singular matrix");
  Matrix cur = m;
  for (u64 k = 1; k <= cap; ++k) {
    if (cur.is_identity()) return k;
    cur = cur * m;
  }
  return std::nullopt;
}

std::optional<u64> element_order(const Matrix& m, u64 cap) {
  if (!m.invertible()) throw std::domain_error("element_order: singular matrix");
  const Field& f = m.field();
  const auto mu = minpoly(m);
  const FieldRing R{f};
  const auto t = FieldPoly::var(R);
  u128 order = 1;
  int max_mult = 1;
  for (const auto& term : factorize(mu)) {
    max_mult = std::max(max_mult, term.multiplicity);
    u128 qd = 1;
    for (int i = 0; i < term.factor.degree(); ++i) {
      qd *= f.q();
      if (qd > (u128{1} << 62)) return element_order_brute(m, cap);
    }
    u64 n = static_cast<u64>(qd) - 1;
    for (auto [r, e] : factorize(n)) {
      for (int i = 0; i < e; ++i) {
        if (!(powmod(t, n / r, term.factor) == FieldPoly::constant(R, f.one()))) break;
        n /= r;
      }
    }
    order = order / gcd_u64(static_cast<u64>(order), n) * n;
    if (order > (u128{1} << 62)) return element_order_brute(m, cap);
  }
  u64 pk = 1;
  while (pk < static_cast<u64>(max_mult)) pk *= f.p();
  return static_cast<u64>(order * pk);
}

u64 projective_order(const Matrix& m) {
  auto ord = element_order(m);
  if (!ord) throw std::domain_error("projective_order: order exceeds cap");
  for (u64 k : divisors(factorize(*ord)))
    if (m.pow(static_cast<long long>(k)).is_scalar()) return k;
  return *ord;
}

std::vector<FieldPoly> invariant_factors(const Matrix& m) {
  const Field& f = m.field();
  const FieldRing R{f};
  const int n = m.n();
  std::vector<std::vector<FieldPoly>> a(static_cast<std::size_t>(n), std::vector<FieldPoly>(static_cast<std::size_t>(n), FieldPoly(R)));
  auto A = [&](int i, int j) -> FieldPoly& { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      A(i, j) = FieldPoly::constant(R, f.neg(m(i, j)));
      if (i == j) A(i, j) += FieldPoly::var(R);
    }
  for (int k = 0; k < n; ++k) {
    while (true) {
      int pi = -1, pj = -1;
      for (int i = k; i < n; ++i)
        for (int j = k; j < n; ++j)
          if (!A(i, j).is_zero() && (pi < 0 || A(i, j).degree() < A(pi, pj).degree())) {
            pi = i;
            pj = j;
          }
      if (pi < 0) break;
      std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(pi)]);
      for (int i = 0; i < n; ++i) std::swap(A(i, k), A(i, pj));
      bool clean = true;
      for (int i = k + 1; i < n; ++i) {
        if (A(i, k).is_zero()) continue;
        auto q = A(i, k) / A(k, k);
        for (int j = k; j < n; ++j) A(i, j) -= q * A(k, j);
        if (!A(i, k).is_zero()) clean = false;
      }
      for (int j = k + 1; j < n; ++j) {
        if (A(k, j).is_zero()) continue;
        auto q = A(k, j) / A(k, k);
        for (int i = k; i < n; ++i) A(i, j) -= q * A(i, k);
        if (!A(k, j).is_zero()) clean = false;
      }
      if (!clean) continue;
      int bad = -1;
      for (int i = k + 1; i < n && bad < 0; ++i)
        for (int j = k + 1; j < n; ++j)
          if (!(A(i, j) % A(k, k)).is_zero()) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      for (int j = k; j < n; ++j) A(k, j) += A(bad, j);
    }
  }
  std::vector<FieldPoly> out;
  for (int k = 0; k < n; ++k)
    if (A(k, k).degree() > 0) out.push_back(make_monic(A(k, k)));
  return out;
}

bool is_conjugate(const Matrix& a, const Matrix& b) {
  require_same(a, b);
  return invariant_factors(a) == invariant_factors(b);
}

nlohmann::json to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.n(); ++i) {
    nlohmann::json r = nlohmann::json::array();
    for (int j = 0; j < m.n(); ++j) r.push_back(m.field().format(m(i, j)));
    rows.push_back(r);
  }
  return {{"n", m.n()}, {"field", m.field().to_string()}, {"rows", rows}};
}

Matrix matrix_from_json(const nlohmann::json& j) {
  const Field f = Field::parse(j.at("field").get<std::string>());
  const int n = j.at("n").get<int>();
  const auto& rows = j.at("rows");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) throw std::invalid_argument("matrix JSON: wrong row count");
  Matrix m(f, n);
  for (int i = 0; i < n; ++i) {
    const auto& r = rows[static_cast<std::size_t>(i)];
    if (!r.is_array() || static_cast<int>(r.size()) != n) throw std::invalid_argument("matrix JSON: wrong row length");
    for (int jj = 0; jj < n; ++jj) {
      const auto& e = r[static_cast<std::size_t>(jj)];
      m(i, jj) = e.is_number_integer() ? f.from_int(e.get<long long>()) : f.parse_element(e.get<std::string>());
    }
  }
  return m;
}

}  // namespace gen23
