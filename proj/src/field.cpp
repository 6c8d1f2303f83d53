#include "gen23/field.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gen23/poly.hpp"

namespace gen23 {

namespace {

using ZpPoly = Poly<ZpRing>;

std::vector<u64> digits_of(u64 index, u64 p, int m) {
  std::vector<u64> d(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    d[static_cast<std::size_t>(i)] = index % p;
    index /= p;
  }
  return d;
}

u64 index_of(const std::vector<u64>& d, u64 p) {
  u64 idx = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) idx = idx * p + *it;
  return idx;
}

u64 parse_u64(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  u64 v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("cannot parse integer '" + std::string(s) + "'");
  return v;
}

long long parse_i64(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("cannot parse integer '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

Field Field::make(u64 p, int m, std::optional<std::vector<u64>> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("Field: p = " + std::to_string(p) + " is not prime");
  if (m < 1) throw std::invalid_argument("Field: exponent m must be positive");
  u64 q = 1;
  for (int i = 0; i < m; ++i) {
    if (q > kMaxOrder / p) throw std::invalid_argument("Field: q exceeds the supported maximum 2^20");
    q *= p;
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->m = m;
  impl->q = q;
  impl->qm1 = static_cast<std::uint32_t>(q - 1);
  const ZpRing zp{p};

  std::vector<u64> mod;
  if (modulus) {
    mod = *modulus;
    if (mod.size() != static_cast<std::size_t>(m) + 1)
      throw std::invalid_argument("Field: modulus must have degree m");
    for (auto& c : mod) c %= p;
    if (mod.back() != 1) throw std::invalid_argument("Field: modulus must be monic");
    if (!is_irreducible(ZpPoly(zp, mod))) throw std::invalid_argument("Field: modulus is reducible over GF(p)");
  } else if (m == 1) {
    mod = {0, 1};
  } else {
    // Enumerate monic candidates with the constant term as the most
    // significant key.
    u64 count = q;
    for (u64 k = 0; k < count; ++k) {
      std::vector<u64> c(static_cast<std::size_t>(m) + 1, 0);
      u64 rest = k;
      for (int i = m - 1; i >= 0; --i) {
        c[static_cast<std::size_t>(i)] = rest % p;
        rest /= p;
      }
      c[static_cast<std::size_t>(m)] = 1;
      if (is_irreducible(ZpPoly(zp, c))) {
        mod = std::move(c);
        break;
      }
    }
  }
  impl->modulus.assign(mod.begin(), mod.end());

  if (m == 1)
    impl->kind = Kind::Prime;
  else if (p == 2)
    impl->kind = Kind::Binary;
  else
    impl->kind = Kind::General;

  impl->qm1_factors = q > 1 ? factorize(q - 1) : Factorization{};
  const ZpPoly modpoly(zp, mod);

  // Primitive element: first index whose order is q-1.
  auto slow_pow = [&](u64 idx, u64 e) {
    auto base = ZpPoly(zp, digits_of(idx, p, m));
    auto r = powmod(base, e, modpoly);
    std::vector<u64> d(static_cast<std::size_t>(m), 0);
    for (int i = 0; i <= r.degree(); ++i) d[static_cast<std::size_t>(i)] = r.coeff(i);
    return index_of(d, p);
  };
  u64 gen = 1;
  for (u64 idx = 1; idx < q; ++idx) {
    bool ok = true;
    for (auto [r, e] : impl->qm1_factors) {
      (void)e;
      if (slow_pow(idx, (q - 1) / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen = idx;
      break;
    }
  }

  // Multiplication-by-gen as an m x m matrix over GF(p): column j = gen * t^j.
  std::vector<std::vector<u64>> cols;
  {
    auto g = ZpPoly(zp, digits_of(gen, p, m));
    for (int j = 0; j < m; ++j) {
      auto prod = (g * ZpPoly::monomial(zp, 1, j)) % modpoly;
      std::vector<u64> d(static_cast<std::size_t>(m), 0);
      for (int i = 0; i <= prod.degree(); ++i) d[static_cast<std::size_t>(i)] = prod.coeff(i);
      cols.push_back(std::move(d));
    }
  }

  impl->exp.assign(2 * (q - 1) + 1, 0);
  impl->log.assign(q, kNoLog);
  std::vector<u64> cur(static_cast<std::size_t>(m), 0);
  cur[0] = 1;
  std::vector<u64> next(static_cast<std::size_t>(m));
  for (u64 k = 0; k < q - 1; ++k) {
    const u64 idx = index_of(cur, p);
    impl->exp[k] = static_cast<std::uint32_t>(idx);
    impl->log[idx] = static_cast<std::uint32_t>(k);
    std::fill(next.begin(), next.end(), 0);
    for (int j = 0; j < m; ++j) {
      const u64 dj = cur[static_cast<std::size_t>(j)];
      if (!dj) continue;
      for (int i = 0; i < m; ++i)
        next[static_cast<std::size_t>(i)] = (next[static_cast<std::size_t>(i)] + dj * cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) % p;
    }
    std::swap(cur, next);
  }
  for (u64 k = 0; k < q - 1; ++k) impl->exp[k + q - 1] = impl->exp[k];

  impl->neg.resize(q);
  for (u64 idx = 0; idx < q; ++idx) {
    auto d = digits_of(idx, p, m);
    for (auto& v : d) v = (p - v) % p;
    impl->neg[idx] = static_cast<std::uint32_t>(index_of(d, p));
  }

  if (impl->kind == Kind::General) {
    impl->zech.resize(q - 1);
    for (u64 k = 0; k < q - 1; ++k) {
      auto d = digits_of(impl->exp[k], p, m);
      d[0] = (d[0] + 1) % p;
      const u64 s = index_of(d, p);
      impl->zech[k] = s == 0 ? kNoLog : impl->log[s];
    }
  }

  Field f;
  f.impl_ = std::move(impl);
  return f;
}

Field Field::parse(std::string_view text) {
  auto slash = text.find('/');
  auto head = text.substr(0, slash);
  auto caret = head.find('^');
  const u64 p = parse_u64(head.substr(0, caret));
  const int m = caret == std::string_view::npos ? 1 : static_cast<int>(parse_u64(head.substr(caret + 1)));
  if (slash == std::string_view::npos) return make(p, m);
  std::vector<u64> mod;
  for (auto part : split(text.substr(slash + 1), ',')) mod.push_back(parse_u64(part));
  return make(p, m, mod);
}

std::string Field::to_string() const {
  std::ostringstream os;
  os << p() << '^' << m() << '/';
  for (std::size_t i = 0; i < modulus().size(); ++i) os << (i ? "," : "") << modulus()[i];
  return os.str();
}

u64 Field::sqrt_q() const {
  if (!is_square_extension()) throw std::domain_error("Field: not a square extension, sigma undefined");
  u64 r = 1;
  for (int i = 0; i < m() / 2; ++i) r *= p();
  return r;
}

Elem Field::from_int(long long v) const {
  const long long pp = static_cast<long long>(p());
  long long r = v % pp;
  if (r < 0) r += pp;
  return {static_cast<std::uint32_t>(r)};
}

Elem Field::from_index(u64 index) const {
  if (index >= q()) throw std::out_of_range("Field: element index out of range");
  return {static_cast<std::uint32_t>(index)};
}

Elem Field::from_coeffs(std::span<const u64> coeffs) const {
  if (coeffs.size() > static_cast<std::size_t>(m())) throw std::invalid_argument("Field: too many coefficients");
  std::vector<u64> d(static_cast<std::size_t>(m()), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) d[i] = coeffs[i] % p();
  return {static_cast<std::uint32_t>(index_of(d, p()))};
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
  auto d = digits_of(a.v, p(), m());
  return {d.begin(), d.end()};
}

Elem Field::generator_t() const {
  if (m() >= 2) return {static_cast<std::uint32_t>(p())};
  return neg(Elem{modulus()[0]});
}

std::string Field::format(Elem a) const {
  auto c = coeffs(a);
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s;
}

Elem Field::parse_element(std::string_view text) const {
  std::vector<u64> c;
  for (auto part : split(text, ',')) {
    long long v = parse_i64(part);
    const long long pp = static_cast<long long>(p());
    v %= pp;
    if (v < 0) v += pp;
    c.push_back(static_cast<u64>(v));
  }
  return from_coeffs(c);
}

Elem Field::inv(Elem a) const {
  if (a.v == 0) throw std::domain_error("Field: inverse of zero");
  const Impl& f = *impl_;
  std::uint32_t la = f.log[a.v];
  return {f.exp[la == 0 ? 0 : f.qm1 - la]};
}

Elem Field::pow(Elem a, long long e) const {
  if (a.v == 0) {
    if (e > 0) return zero();
    if (e == 0) return one();
    throw std::domain_error("Field: negative power of zero");
  }
  const long long n = static_cast<long long>(impl_->qm1);
  long long r = e % n;
  if (r < 0) r += n;
  const u64 k = static_cast<u64>((static_cast<u128>(impl_->log[a.v]) * static_cast<u64>(r)) % impl_->qm1);
  return {impl_->exp[k]};
}

Elem Field::frobenius(Elem a, int d) const {
  if (a.v == 0) return a;
  if (impl_->qm1 == 1) return a;
  const u64 e = powmod(p(), static_cast<u64>(d), impl_->qm1);
  return {impl_->exp[(static_cast<u128>(impl_->log[a.v]) * e) % impl_->qm1]};
}

Elem Field::sigma(Elem a) const {
  if (!is_square_extension()) throw std::domain_error("Field: sigma requires a square extension");
  return frobenius(a, m() / 2);
}

u64 Field::order(Elem a) const {
  if (a.v == 0) throw std::domain_error("Field: order of zero");
  u64 ord = q() - 1;
  for (auto [r, e] : impl_->qm1_factors) {
    for (int i = 0; i < e; ++i) {
      if (pow(a, static_cast<long long>(ord / r)) == one())
        ord /= r;
      else
        break;
    }
  }
  return ord;
}

int Field::degree_over_prime(Elem a) const {
  for (int d = 1; d <= m(); ++d) {
    if (m() % d == 0 && frobenius(a, d) == a) return d;
  }
  return m();
}

SubfieldDescriptor Field::subfield_generated(Elem a) const {
  const int d = degree_over_prime(a);
  u64 size = 1;
  for (int i = 0; i < d; ++i) size *= p();
  return {p(), d, size};
}

std::vector<Elem> Field::elements_of_order(u64 k) const {
  std::vector<Elem> out;
  const u64 n = q() - 1;
  if (k == 0 || n % k != 0) return out;
  const u64 step = n / k;
  for (u64 j = 0; j < k; ++j) {
    if (std::gcd(j, k) == 1) out.push_back(exp(j * step));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FieldEmbedding FieldEmbedding::find(const Field& src, const Field& dst) {
  if (src.p() != dst.p() || dst.m() % src.m() != 0)
    throw std::invalid_argument("FieldEmbedding: source is not a subfield of target");
  FieldEmbedding e;
  e.src_ = src;
  e.dst_ = dst;
  // Candidate roots lie in the unique subfield of order q_src.
  std::vector<Elem> cands{dst.zero()};
  const u64 step = (dst.q() - 1) / (src.q() - 1);
  for (u64 j = 0; j < src.q() - 1; ++j) cands.push_back(dst.exp(j * step));
  std::sort(cands.begin(), cands.end());
  const auto& mod = src.modulus();
  Elem root{};
  bool found = false;
  for (Elem r : cands) {
    Elem acc = dst.zero();
    for (auto it = mod.rbegin(); it != mod.rend(); ++it) acc = dst.add(dst.mul(acc, r), dst.from_int(*it));
    if (acc == dst.zero()) {
      root = r;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("FieldEmbedding: no root of the source modulus in the target");
  e.table_.resize(src.q());
  for (u64 idx = 0; idx < src.q(); ++idx) {
    auto c = src.coeffs(src.from_index(idx));
    Elem acc = dst.zero();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = dst.add(dst.mul(acc, root), dst.from_int(*it));
    e.table_[idx] = acc;
  }
  return e;
}

Elem FieldEmbedding::operator()(Elem a) const { return table_.at(a.v); }

Field extension_containing_order(const Field& src, u64 k) {
  if (k % src.p() == 0) throw std::invalid_argument("extension_containing_order: order divisible by the characteristic");
  u64 qd = src.q() % k;
  int d = 1;
  while (qd != 1 % k) {
    qd = mulmod(qd, src.q() % k, k);
    ++d;
  }
  if (d == 1) return src;
  return Field::make(src.p(), src.m() * d);
}

}  // namespace gen23
