#pragma once

// Dense univariate polynomials over a coefficient ring policy, plus the
// finite-field algorithms (gcd, modular powering, squarefree / distinct-degree /
// equal-degree factorization) and Sylvester-matrix resultants.
//
// A Ring policy provides: value_type, zero(), one(), add, sub, neg, mul,
// is_zero, eq, from_int. Field policies add inv. Finite-field policies add
// size(), characteristic(), pth_root() and random(). Rings used with the
// fraction-free resultant add divexact.

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gen23/numtheory.hpp"

namespace gen23 {

/// Integers modulo a prime p < 2^63.
struct ZpRing {
  using value_type = u64;
  u64 p = 2;

  value_type zero() const { return 0; }
  value_type one() const { return 1 % p; }
  value_type from_int(long long v) const {
    long long r = v % static_cast<long long>(p);
    return static_cast<u64>(r < 0 ? r + static_cast<long long>(p) : r);
  }
  value_type add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p ? s - p : s;
  }
  value_type sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  value_type neg(u64 a) const { return a == 0 ? 0 : p - a; }
  value_type mul(u64 a, u64 b) const { return mulmod(a, b, p); }
  value_type inv(u64 a) const {
    if (a == 0) throw std::domain_error("ZpRing: inverse of zero");
    return powmod(a, p - 2, p);
  }
  value_type divexact(u64 a, u64 b) const { return mul(a, inv(b)); }
  bool is_zero(u64 a) const { return a == 0; }
  bool eq(u64 a, u64 b) const { return a == b; }
  u64 size() const { return p; }
  u64 characteristic() const { return p; }
  value_type pth_root(u64 a) const { return a; }
  template <class Rng>
  value_type random(Rng& rng) const {
    return std::uniform_int_distribution<u64>(0, p - 1)(rng);
  }
  bool operator==(const ZpRing&) const = default;
};

template <class Ring>
class Poly {
 public:
  using value_type = typename Ring::value_type;

  Poly() = default;
  explicit Poly(Ring ring) : ring_(std::move(ring)) {}
  Poly(Ring ring, std::vector<value_type> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) { trim(); }

  static Poly constant(const Ring& ring, value_type c) { return Poly(ring, {std::move(c)}); }
  static Poly monomial(const Ring& ring, value_type c, int deg) {
    std::vector<value_type> v(static_cast<std::size_t>(deg) + 1, ring.zero());
    v.back() = std::move(c);
    return Poly(ring, std::move(v));
  }
  /// The indeterminate t.
  static Poly var(const Ring& ring) { return monomial(ring, ring.one(), 1); }

  const Ring& ring() const { return ring_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<value_type>& coeffs() const { return c_; }
  value_type coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : ring_.zero();
  }
  const value_type& lead() const {
    if (c_.empty()) throw std::domain_error("Poly::lead on zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && ring_.eq(c_.back(), ring_.one()); }

  value_type eval(const value_type& x) const {
    value_type acc = ring_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = ring_.add(ring_.mul(acc, x), *it);
    return acc;
  }

  Poly derivative() const {
    std::vector<value_type> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
      d.push_back(ring_.mul(ring_.from_int(static_cast<long long>(i)), c_[i]));
    return Poly(ring_, std::move(d));
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = ring_.neg(v);
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ring_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = ring_.add(c_[i], o.c_[i]);
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ring_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = ring_.sub(c_[i], o.c_[i]);
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
    std::vector<value_type> r(a.c_.size() + b.c_.size() - 1, a.ring_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.ring_.is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] = a.ring_.add(r[i + j], a.ring_.mul(a.c_[i], b.c_[j]));
    }
    return Poly(a.ring_, std::move(r));
  }
  Poly scaled(const value_type& s) const {
    std::vector<value_type> r;
    r.reserve(c_.size());
    for (const auto& v : c_) r.push_back(ring_.mul(v, s));
    return Poly(ring_, std::move(r));
  }
  /// Multiply by t^k.
  Poly shifted(int k) const {
    if (is_zero()) return *this;
    std::vector<value_type> r(static_cast<std::size_t>(k), ring_.zero());
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(ring_, std::move(r));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!a.ring_.eq(a.c_[i], b.c_[i])) return false;
    return true;
  }

 private:
  void trim() {
    while (!c_.empty() && ring_.is_zero(c_.back())) c_.pop_back();
  }

  Ring ring_{};
  std::vector<value_type> c_;
};

// ---------------------------------------------------------------------------
// Euclidean algorithms over a field.

template <class Ring>
std::pair<Poly<Ring>, Poly<Ring>> divmod(const Poly<Ring>& a, const Poly<Ring>& b) {
  if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
  const Ring& R = a.ring();
  if (a.degree() < b.degree()) return {Poly<Ring>(R), a};
  auto rem = a.coeffs();
  const int db = b.degree();
  const auto inv_lead = R.inv(b.lead());
  std::vector<typename Ring::value_type> quo(static_cast<std::size_t>(a.degree() - db + 1), R.zero());
  for (int i = a.degree(); i >= db; --i) {
    auto coef = R.mul(rem[static_cast<std::size_t>(i)], inv_lead);
    quo[static_cast<std::size_t>(i - db)] = coef;
    if (R.is_zero(coef)) continue;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - db + j)];
      slot = R.sub(slot, R.mul(coef, b.coeffs()[static_cast<std::size_t>(j)]));
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly<Ring>(R, std::move(quo)), Poly<Ring>(R, std::move(rem))};
}

template <class Ring>
Poly<Ring> operator%(const Poly<Ring>& a, const Poly<Ring>& b) {
  return divmod(a, b).second;
}

template <class Ring>
Poly<Ring> operator/(const Poly<Ring>& a, const Poly<Ring>& b) {
  return divmod(a, b).first;
}

template <class Ring>
Poly<Ring> make_monic(const Poly<Ring>& f) {
  if (f.is_zero()) return f;
  return f.scaled(f.ring().inv(f.lead()));
}

/// Monic gcd; gcd(0, 0) = 0.
template <class Ring>
Poly<Ring> gcd(Poly<Ring> a, Poly<Ring> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

/// base^e mod m.
template <class Ring, class Exp>
Poly<Ring> powmod(Poly<Ring> base, Exp e, const Poly<Ring>& m) {
  Poly<Ring> r = Poly<Ring>::constant(m.ring(), m.ring().one()) % m;
  base = base % m;
  while (e > 0) {
    if (e & 1) r = (r * base) % m;
    e >>= 1;
    if (e > 0) base = (base * base) % m;
  }
  return r;
}

/// Euclidean resultant over a field.
template <class Ring>
typename Ring::value_type resultant_euclid(Poly<Ring> f, Poly<Ring> g) {
  const Ring& R = f.ring();
  if (f.is_zero() || g.is_zero()) return R.zero();
  typename Ring::value_type res = R.one();
  while (true) {
    const int df = f.degree(), dg = g.degree();
    if (dg == 0) {
      auto lg = g.lead();
      for (int i = 0; i < df; ++i) res = R.mul(res, lg);
      return res;
    }
    auto r = f % g;
    if (r.is_zero()) return R.zero();
    // res(f, g) = (-1)^(df dg) lc(g)^(df - dr) res(g, r)
    if ((df % 2 == 1) && (dg % 2 == 1)) res = R.neg(res);
    auto lg = g.lead();
    for (int i = 0; i < df - r.degree(); ++i) res = R.mul(res, lg);
    f = std::move(g);
    g = std::move(r);
  }
}

// ---------------------------------------------------------------------------
// Fraction-free determinant (Bareiss) and Sylvester resultant; valid over any
// integral domain whose policy supplies divexact.

template <class Ring>
typename Ring::value_type det_bareiss(std::vector<std::vector<typename Ring::value_type>> a, const Ring& R) {
  const std::size_t n = a.size();
  if (n == 0) return R.one();
  bool negate = false;
  typename Ring::value_type prev = R.one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (R.is_zero(a[k][k])) {
      std::size_t s = k + 1;
      while (s < n && R.is_zero(a[s][k])) ++s;
      if (s == n) return R.zero();
      std::swap(a[k], a[s]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto num = R.sub(R.mul(a[i][j], a[k][k]), R.mul(a[i][k], a[k][j]));
        a[i][j] = R.divexact(num, prev);
      }
      a[i][k] = R.zero();
    }
    prev = a[k][k];
  }
  auto d = a[n - 1][n - 1];
  return negate ? R.neg(d) : d;
}

template <class Ring>
std::vector<std::vector<typename Ring::value_type>> sylvester_matrix(const Poly<Ring>& f, const Poly<Ring>& g) {
  const Ring& R = f.ring();
  const int m = f.degree(), n = g.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<typename Ring::value_type>> s(size, std::vector<typename Ring::value_type>(size, R.zero()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = f.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = g.coeff(n - j);
  return s;
}

/// Resultant as the determinant of the Sylvester matrix.
template <class Ring>
typename Ring::value_type resultant_sylvester(const Poly<Ring>& f, const Poly<Ring>& g) {
  const Ring& R = f.ring();
  if (f.degree() <= 0 && g.degree() <= 0)
    throw std::invalid_argument("resultant: both inputs constant in the eliminated variable");
  if (f.is_zero() || g.is_zero()) return R.zero();
  if (f.degree() == 0) {
    auto r = R.one();
    for (int i = 0; i < g.degree(); ++i) r = R.mul(r, f.lead());
    return r;
  }
  if (g.degree() == 0) {
    auto r = R.one();
    for (int i = 0; i < f.degree(); ++i) r = R.mul(r, g.lead());
    return r;
  }
  return det_bareiss(sylvester_matrix(f, g), R);
}

// ---------------------------------------------------------------------------
// Factorization over finite fields.

template <class Ring>
struct FactorTerm {
  Poly<Ring> factor;
  int multiplicity = 1;
};

/// Squarefree decomposition of a monic polynomial over a finite field:
/// f = prod g_i^i with each g_i squarefree and pairwise coprime.
template <class Ring>
std::vector<FactorTerm<Ring>> squarefree_decomposition(const Poly<Ring>& f) {
  const Ring& R = f.ring();
  std::vector<FactorTerm<Ring>> out;
  if (f.degree() <= 0) return out;
  auto fd = f.derivative();
  if (fd.is_zero()) {
    // f = h(t^p); take p-th roots of the coefficients.
    const u64 p = R.characteristic();
    std::vector<typename Ring::value_type> h;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) h.push_back(R.pth_root(f.coeff(i)));
    for (auto& t : squarefree_decomposition(Poly<Ring>(R, std::move(h)))) {
      t.multiplicity *= static_cast<int>(p);
      out.push_back(std::move(t));
    }
    return out;
  }
  auto c = gcd(f, fd);
  auto w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    auto y = gcd(w, c);
    auto z = w / y;
    if (z.degree() > 0) out.push_back({make_monic(z), i});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    const u64 p = R.characteristic();
    std::vector<typename Ring::value_type> h;
    for (int k = 0; k <= c.degree(); k += static_cast<int>(p)) h.push_back(R.pth_root(c.coeff(k)));
    for (auto& t : squarefree_decomposition(make_monic(Poly<Ring>(R, std::move(h))))) {
      t.multiplicity *= static_cast<int>(p);
      out.push_back(std::move(t));
    }
  }
  // Merge equal factors produced by the two branches.
  std::vector<FactorTerm<Ring>> merged;
  for (auto& t : out) {
    bool found = false;
    for (auto& m : merged) {
      if (m.factor == t.factor) {
        m.multiplicity += t.multiplicity;
        found = true;
      }
    }
    if (!found) merged.push_back(std::move(t));
  }
  return merged;
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// returns (product of all irreducible factors of degree d, d).
template <class Ring>
std::vector<std::pair<Poly<Ring>, int>> distinct_degree(Poly<Ring> f) {
  const Ring& R = f.ring();
  const u64 Q = R.size();
  std::vector<std::pair<Poly<Ring>, int>> out;
  const auto t = Poly<Ring>::var(R);
  auto h = t % f;
  int d = 0;
  while (f.degree() >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, Q, f);
    auto g = gcd(f, h - t);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(make_monic(f), f.degree());
  return out;
}

/// Splits a monic squarefree product of irreducibles of equal degree d
/// (Cantor-Zassenhaus; trace map in characteristic 2).
template <class Ring, class Rng>
std::vector<Poly<Ring>> equal_degree(const Poly<Ring>& f, int d, Rng& rng) {
  const Ring& R = f.ring();
  if (f.degree() == d) return {f};
  const u64 Q = R.size();
  const u64 p = R.characteristic();
  while (true) {
    std::vector<typename Ring::value_type> rc;
    for (int i = 0; i < f.degree(); ++i) rc.push_back(R.random(rng));
    Poly<Ring> r(R, std::move(rc));
    if (r.degree() <= 0) continue;
    Poly<Ring> s(R);
    if (p == 2) {
      // Q = 2^k; trace from GF(Q^d) to GF(2).
      int k = 0;
      for (u64 v = Q; v > 1; v >>= 1) ++k;
      auto term = r;
      s = term;
      for (int i = 1; i < k * d; ++i) {
        term = (term * term) % f;
        s += term;
      }
    } else {
      // r^((Q^d - 1)/2) = (r^(1 + Q + ... + Q^(d-1)))^((Q - 1)/2)
      auto norm = r;
      auto frob = r;
      for (int i = 1; i < d; ++i) {
        frob = powmod(frob, Q, f);
        norm = (norm * frob) % f;
      }
      s = powmod(norm, (Q - 1) / 2, f) - Poly<Ring>::constant(R, R.one());
    }
    auto g = gcd(f, s);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      auto left = equal_degree(g, d, rng);
      auto right = equal_degree(make_monic(f / g), d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

/// Complete factorization over a finite field into monic irreducibles,
/// sorted by (degree, coefficients). The leading coefficient is dropped.
template <class Ring>
std::vector<FactorTerm<Ring>> factor_finite_field(const Poly<Ring>& f, std::uint64_t seed = 0x9e3779b97f4a7c15ULL) {
  if (f.is_zero()) throw std::invalid_argument("factorize: zero polynomial");
  std::mt19937_64 rng(seed);
  std::vector<FactorTerm<Ring>> out;
  for (const auto& sq : squarefree_decomposition(make_monic(f))) {
    for (const auto& [prod, d] : distinct_degree(sq.factor)) {
      for (auto& g : equal_degree(prod, d, rng)) out.push_back({make_monic(g), sq.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), [](const FactorTerm<Ring>& a, const FactorTerm<Ring>& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    const auto& ca = a.factor.coeffs();
    const auto& cb = b.factor.coeffs();
    return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
  });
  return out;
}

/// Rabin irreducibility test over a finite field.
template <class Ring>
bool is_irreducible(const Poly<Ring>& f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  const Ring& R = f.ring();
  const auto fm = make_monic(f);
  const u64 Q = R.size();
  const int n = fm.degree();
  const auto t = Poly<Ring>::var(R);
  auto frob_iter = [&](int k) {
    auto h = t % fm;
    for (int i = 0; i < k; ++i) h = powmod(h, Q, fm);
    return h;
  };
  if (!(frob_iter(n) == t % fm)) return false;
  for (auto [r, e] : factorize(static_cast<u64>(n))) {
    (void)e;
    auto h = frob_iter(n / static_cast<int>(r));
    if (gcd(fm, h - t).degree() != 0) return false;
  }
  return true;
}

}  // namespace gen23
