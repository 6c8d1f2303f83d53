#include "gen23/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/integer.hpp>

namespace gen23 {

namespace {

using ZpPoly = Poly<ZpRing>;

BigInt big_abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

long long to_ll(const BigInt& a) {
  if (a > std::numeric_limits<long long>::max() || a < std::numeric_limits<long long>::min())
    throw std::overflow_error("integer does not fit in 64 bits");
  return a.convert_to<long long>();
}

u64 residue(const BigInt& a, u64 p) {
  BigInt r = a % p;
  if (r < 0) r += p;
  return r.convert_to<u64>();
}

ZpPoly to_zp(const IntPoly& f, u64 p) {
  const ZpRing zp{p};
  std::vector<u64> c;
  for (const auto& v : f.coeffs()) c.push_back(residue(v, p));
  return ZpPoly(zp, std::move(c));
}

IntPoly lift_symmetric(const ZpPoly& f) {
  const BigInt p = f.ring().p;
  std::vector<BigInt> c;
  for (u64 v : f.coeffs()) c.push_back(symmetric_residue(BigInt(v), p));
  return IntPoly(IntRing{}, std::move(c));
}

/// Pseudo-remainder of a by b.
IntPoly prem(IntPoly a, const IntPoly& b) {
  const BigInt lb = b.lead();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const int shift = a.degree() - b.degree();
    a = a.scaled(lb) - b.scaled(a.lead()).shifted(shift);
  }
  return a;
}

bool squarefree_mod(const IntPoly& f, u64 p) {
  auto fp = to_zp(f, p);
  if (fp.degree() != f.degree()) return false;
  return gcd(fp, fp.derivative()).degree() == 0;
}

/// Factors a primitive squarefree polynomial of positive degree.
std::vector<IntPoly> factor_squarefree(const IntPoly& g) {
  const int n = g.degree();
  if (n == 1) return {g};

  // Coefficients of any factor, scaled to leading coefficient lc(g), are
  // bounded by |lc| * 2^n * ||g||_2.
  BigInt norm2 = 0;
  for (const auto& c : g.coeffs()) norm2 += c * c;
  BigInt bound = big_abs(g.lead()) * (BigInt(1) << n) * (boost::multiprecision::sqrt(norm2) + 1);
  if (bound > (BigInt(1) << 60)) throw std::domain_error("factorize: coefficients too large for desk-scale method");
  u64 p = bound.convert_to<u64>() * 2 + 1;

  std::vector<ZpPoly> best;
  u64 best_p = 0;
  for (int tries = 0; tries < 5;) {
    while (!is_prime(p)) ++p;
    if (residue(g.lead(), p) != 0 && squarefree_mod(g, p)) {
      std::vector<ZpPoly> mods;
      for (auto& t : factor_finite_field(make_monic(to_zp(g, p)))) mods.push_back(t.factor);
      if (best_p == 0 || mods.size() < best.size()) {
        best = std::move(mods);
        best_p = p;
      }
      ++tries;
    }
    ++p;
  }
  if (best.size() == 1) return {g};

  // Zassenhaus recombination by subsets of increasing size.
  std::vector<IntPoly> out;
  IntPoly rest = g;
  std::vector<ZpPoly> mods = best;
  const ZpRing zp{best_p};
  std::size_t s = 1;
  while (2 * s <= mods.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      ZpPoly prod = ZpPoly::constant(zp, residue(rest.lead(), best_p));
      for (auto i : idx) prod = prod * mods[i];
      IntPoly cand = primitive_part(lift_symmetric(prod));
      if (cand.degree() > 0) {
        if (auto q = divide_exact(rest, cand)) {
          out.push_back(cand);
          rest = *q;
          for (auto it = idx.rbegin(); it != idx.rend(); ++it) mods.erase(mods.begin() + static_cast<long>(*it));
          found = true;
          break;
        }
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == mods.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (rest.degree() > 0) out.push_back(primitive_part(rest));
  return out;
}

// --- text parsing -------------------------------------------------------------

struct RawTerm {
  bool negative = false;
  BigInt coef = 1;
  std::vector<std::string> paren;
  std::map<std::string, int> exps;
};

class TermParser {
 public:
  explicit TermParser(std::string_view s) : s_(s) {}

  std::vector<RawTerm> run() {
    std::vector<RawTerm> out;
    skip();
    if (pos_ == s_.size()) throw std::invalid_argument("empty polynomial text");
    bool first = true;
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      RawTerm t;
      if (peek() == '+' || peek() == '-') {
        t.negative = peek() == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      factor(t);
      while (true) {
        skip();
        if (peek() != '*') break;
        ++pos_;
        factor(t);
      }
      out.push_back(std::move(t));
    }
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument(std::string("polynomial parse error at ") + std::to_string(pos_) + ": " + what);
  }
  std::string digits() {
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected digits");
    return std::string(s_.substr(b, pos_ - b));
  }
  void factor(RawTerm& t) {
    skip();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.coef *= BigInt(digits());
    } else if (c == '(') {
      const auto close = s_.find(')', pos_);
      if (close == std::string_view::npos) fail("unbalanced parenthesis");
      t.paren.emplace_back(s_.substr(pos_ + 1, close - pos_ - 1));
      pos_ = close + 1;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t b = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(b, pos_ - b));
      int e = 1;
      skip();
      if (peek() == '^') {
        ++pos_;
        skip();
        e = std::stoi(digits());
      }
      t.exps[name] += e;
    } else {
      fail("unexpected character");
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

int exponent_of(const RawTerm& t, std::string_view var) {
  int e = 0;
  for (const auto& [name, k] : t.exps) {
    if (name != var) throw std::invalid_argument("unknown variable '" + name + "'");
    e = k;
  }
  return e;
}

std::string join_terms(const std::vector<std::pair<bool, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [neg, body] = terms[i];
    if (i == 0)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    s += body;
  }
  return s;
}

std::string monomial_text(std::string coef, std::string_view var, int e) {
  if (e == 0) return coef;
  std::string m(var);
  if (e > 1) m += "^" + std::to_string(e);
  return coef == "1" ? m : coef + "*" + m;
}

}  // namespace

// --- integers -------------------------------------------------------------------

BigInt IntRing::divexact(const BigInt& a, const BigInt& b) const {
  BigInt q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) throw std::domain_error("IntRing::divexact: inexact division");
  return q;
}

IntPoly int_poly(std::initializer_list<long long> coeffs) {
  std::vector<BigInt> c(coeffs.begin(), coeffs.end());
  return IntPoly(IntRing{}, std::move(c));
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
  if (a.is_zero()) return a;
  if (a.degree() < b.degree()) return std::nullopt;
  auto rem = a.coeffs();
  const int db = b.degree();
  std::vector<BigInt> quo(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    BigInt q, r;
    boost::multiprecision::divide_qr(rem[static_cast<std::size_t>(i)], b.lead(), q, r);
    if (r != 0) return std::nullopt;
    quo[static_cast<std::size_t>(i - db)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  for (const auto& v : rem)
    if (v != 0) return std::nullopt;
  return IntPoly(IntRing{}, std::move(quo));
}

BigInt content(const IntPoly& f) {
  BigInt g = 0;
  for (const auto& c : f.coeffs()) g = boost::multiprecision::gcd(g, c);
  return g;
}

IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return f;
  BigInt c = content(f);
  if (f.lead() < 0) c = -c;
  std::vector<BigInt> out;
  for (const auto& v : f.coeffs()) out.push_back(v / c);
  return IntPoly(IntRing{}, std::move(out));
}

IntPoly gcd(const IntPoly& a0, const IntPoly& b0) {
  IntPoly a = primitive_part(a0), b = primitive_part(b0);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = primitive_part(prem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

IntPoly IntPolyRing::divexact(const IntPoly& a, const IntPoly& b) const {
  auto q = divide_exact(a, b);
  if (!q) throw std::domain_error("IntPolyRing::divexact: inexact division");
  return *q;
}

BigInt symmetric_residue(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

// --- bivariate --------------------------------------------------------------------

BivarPoly BivarPoly::parse(std::string_view text, std::string var0, std::string var1) {
  BivarPoly f(std::move(var0), std::move(var1));
  for (const auto& t : TermParser(text).run()) {
    if (!t.paren.empty()) throw std::invalid_argument("BivarPoly: parenthesized coefficients not supported");
    int e[2] = {0, 0};
    for (const auto& [name, k] : t.exps) {
      const int i = f.var_index(name);
      if (i < 0) throw std::invalid_argument("BivarPoly: unknown variable '" + name + "'");
      e[i] += k;
    }
    f.add_term(e[0], e[1], t.negative ? BigInt(-t.coef) : t.coef);
  }
  return f;
}

void BivarPoly::add_term(int e0, int e1, const BigInt& c) {
  auto& slot = terms_[{e0, e1}];
  slot += c;
  if (slot == 0) terms_.erase({e0, e1});
}

int BivarPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, var == 0 ? e.first : e.second);
  return d;
}

int BivarPoly::var_index(std::string_view name) const {
  if (name == vars_[0]) return 0;
  if (name == vars_[1]) return 1;
  return -1;
}

Poly<IntPolyRing> BivarPoly::as_poly_in(int var) const {
  const int d = degree_in(var);
  std::vector<std::vector<BigInt>> cols(static_cast<std::size_t>(std::max(d + 1, 0)));
  for (const auto& [e, c] : terms_) {
    const int outer = var == 0 ? e.first : e.second;
    const int inner = var == 0 ? e.second : e.first;
    auto& col = cols[static_cast<std::size_t>(outer)];
    if (static_cast<int>(col.size()) <= inner) col.resize(static_cast<std::size_t>(inner) + 1);
    col[static_cast<std::size_t>(inner)] += c;
  }
  std::vector<IntPoly> coeffs;
  for (auto& col : cols) coeffs.emplace_back(IntRing{}, std::move(col));
  return Poly<IntPolyRing>(IntPolyRing{}, std::move(coeffs));
}

std::string BivarPoly::to_string() const {
  std::vector<std::pair<bool, std::string>> parts;
  // Descending total degree, then descending in the first variable.
  std::vector<std::pair<Exponents, BigInt>> ts(terms_.begin(), terms_.end());
  std::stable_sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
    const int dx = x.first.first + x.first.second, dy = y.first.first + y.first.second;
    if (dx != dy) return dx > dy;
    return x.first.first > y.first.first;
  });
  for (const auto& [e, c] : ts) {
    std::string body;
    const BigInt mag = big_abs(c);
    std::vector<std::string> fs;
    if (mag != 1 || (e.first == 0 && e.second == 0)) fs.push_back(mag.str());
    for (int i = 0; i < 2; ++i) {
      const int k = i == 0 ? e.first : e.second;
      if (k == 0) continue;
      fs.push_back(k == 1 ? vars_[i] : vars_[i] + "^" + std::to_string(k));
    }
    for (std::size_t i = 0; i < fs.size(); ++i) body += (i ? "*" : "") + fs[i];
    parts.emplace_back(c < 0, body);
  }
  return join_terms(parts);
}

IntPoly resultant(const BivarPoly& f, const BivarPoly& g, std::string_view eliminate) {
  const int i = f.var_index(eliminate);
  if (i < 0 || g.var_index(eliminate) != i || f.var(1 - i) != g.var(1 - i))
    throw std::invalid_argument("resultant: inputs must share variables");
  return resultant_sylvester(f.as_poly_in(i), g.as_poly_in(i));
}

BigInt resultant(const IntPoly& f, const IntPoly& g) { return resultant_sylvester(f, g); }

// --- factorization ------------------------------------------------------------------

IntFactorization factorize(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("factorize: zero polynomial");
  IntFactorization out;
  out.unit = content(f);
  if (f.lead() < 0) out.unit = -out.unit;
  const IntPoly pp = primitive_part(f);
  if (pp.degree() == 0) return out;
  const IntPoly sqf = primitive_part(*divide_exact(pp, gcd(pp, pp.derivative())));
  for (auto& h : factor_squarefree(sqf)) {
    IntPoly rest = pp;
    int mult = 0;
    while (auto q = divide_exact(rest, h)) {
      rest = *q;
      ++mult;
    }
    out.factors.push_back({h, mult});
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    const auto& ca = a.factor.coeffs();
    const auto& cb = b.factor.coeffs();
    return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
  });
  return out;
}

std::vector<FactorTerm<FieldRing>> factorize(const FieldPoly& f) { return factor_finite_field(f); }

std::pair<FieldPoly, bool> gcd_coprime(const FieldPoly& f, const FieldPoly& g) {
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd_coprime: both inputs zero");
  auto d = gcd(f, g);
  return {d, d.degree() == 0};
}

FieldPoly reduce_mod(const IntPoly& f, const Field& field) {
  std::vector<Elem> c;
  for (const auto& v : f.coeffs()) c.push_back(field.from_int(static_cast<long long>(residue(v, field.p()))));
  return FieldPoly(FieldRing{field}, std::move(c));
}

ClaimReport splitting_order_check(const IntPoly& f, u64 p, u64 k) {
  const auto t0 = std::chrono::steady_clock::now();
  if (!is_prime(p)) throw std::invalid_argument("splitting_order_check: p must be prime");
  const Field fp = Field::make(p, 1);
  const auto g = reduce_mod(f, fp);
  if (g.is_zero()) throw std::invalid_argument("splitting_order_check: polynomial vanishes mod p");
  u64 d = 1;
  nlohmann::json degrees = nlohmann::json::array();
  for (const auto& t : factorize(g)) {
    d = lcm_u64(d, static_cast<u64>(t.factor.degree()));
    degrees.push_back({{"degree", t.factor.degree()}, {"multiplicity", t.multiplicity}});
  }
  const u64 need = k / gcd_u64(k, p);
  // smallest e with need | p^e - 1
  u64 e = 1;
  for (u64 pe = p % need; pe != 1 % need; pe = mulmod(pe, p, need)) ++e;
  const bool contains = d % e == 0;
  ClaimReport r{"lemma-3.3-splitting-p" + std::to_string(p), "Lemma 3.3 (iii)", contains, {}, 0};
  r.data = {{"p", p},
            {"factor_degrees", degrees},
            {"splitting_degree", d},
            {"required_order", need},
            {"order_field_degree", e},
            {"splits_in_order_field", e % d == 0}};
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// --- text and JSON -------------------------------------------------------------------

std::string to_string(const IntPoly& f, std::string_view var) {
  std::vector<std::pair<bool, std::string>> parts;
  for (int i = 0; i <= f.degree(); ++i) {
    const BigInt& c = f.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    parts.emplace_back(c < 0, monomial_text(big_abs(c).str(), var, i));
  }
  return join_terms(parts);
}

std::string to_string(const FieldPoly& f, std::string_view var) {
  const Field& F = f.ring().field;
  std::vector<std::pair<bool, std::string>> parts;
  for (int i = 0; i <= f.degree(); ++i) {
    const Elem c = f.coeffs()[static_cast<std::size_t>(i)];
    if (c == F.zero()) continue;
    std::string cs = F.is_prime_field() ? F.format(c) : "(" + F.format(c) + ")";
    if (c == F.one()) cs = "1";
    parts.emplace_back(false, monomial_text(cs, var, i));
  }
  return join_terms(parts);
}

IntPoly parse_int_poly(std::string_view text, std::string_view var) {
  std::vector<BigInt> c;
  for (const auto& t : TermParser(text).run()) {
    if (!t.paren.empty()) throw std::invalid_argument("integer polynomial: unexpected parenthesis");
    const int e = exponent_of(t, var);
    if (static_cast<int>(c.size()) <= e) c.resize(static_cast<std::size_t>(e) + 1);
    c[static_cast<std::size_t>(e)] += t.negative ? BigInt(-t.coef) : t.coef;
  }
  return IntPoly(IntRing{}, std::move(c));
}

FieldPoly parse_field_poly(const Field& field, std::string_view text, std::string_view var) {
  std::vector<Elem> c;
  for (const auto& t : TermParser(text).run()) {
    const int e = exponent_of(t, var);
    Elem v = field.from_int(static_cast<long long>(residue(t.coef, field.p())));
    for (const auto& s : t.paren) v = field.mul(v, field.parse_element(s));
    if (t.negative) v = field.neg(v);
    if (static_cast<int>(c.size()) <= e) c.resize(static_cast<std::size_t>(e) + 1, field.zero());
    c[static_cast<std::size_t>(e)] = field.add(c[static_cast<std::size_t>(e)], v);
  }
  return FieldPoly(FieldRing{field}, std::move(c));
}

nlohmann::json to_json(const IntPoly& f) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : f.coeffs()) {
    if (c > std::numeric_limits<long long>::max() || c < std::numeric_limits<long long>::min())
      j.push_back(c.str());
    else
      j.push_back(to_ll(c));
  }
  return j;
}

nlohmann::json to_json(const FieldPoly& f) {
  const Field& F = f.ring().field;
  nlohmann::json j = nlohmann::json::array();
  for (Elem c : f.coeffs()) {
    if (F.is_prime_field())
      j.push_back(F.coeffs(c)[0]);
    else
      j.push_back(F.format(c));
  }
  return j;
}

IntPoly int_poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<BigInt> c;
  for (const auto& v : j) {
    if (v.is_number_integer())
      c.emplace_back(v.get<long long>());
    else if (v.is_string())
      c.emplace_back(v.get<std::string>());
    else
      throw std::invalid_argument("polynomial JSON: bad coefficient");
  }
  return IntPoly(IntRing{}, std::move(c));
}

FieldPoly field_poly_from_json(const Field& field, const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<Elem> c;
  for (const auto& v : j) {
    if (v.is_number_integer())
      c.push_back(field.from_int(v.get<long long>()));
    else if (v.is_string())
      c.push_back(field.parse_element(v.get<std::string>()));
    else
      throw std::invalid_argument("polynomial JSON: bad coefficient");
  }
  return FieldPoly(FieldRing{field}, std::move(c));
}

}  // namespace gen23
