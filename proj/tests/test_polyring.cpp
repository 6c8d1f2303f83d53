#include <map>
#include <random>

#include "doctest.h"
#include "gen23/polyring.hpp"

using namespace gen23;

namespace {

const char* kR = "8 - 37*t^3 - 67*t^6 + 59*t^9 - 16*t^12 + t^15";

IntPoly product(const IntFactorization& f) {
  IntPoly r = IntPoly::constant(IntRing{}, f.unit);
  for (const auto& t : f.factors)
    for (int i = 0; i < t.multiplicity; ++i) r = r * t.factor;
  return r;
}

FieldPoly fpoly(const Field& f, std::initializer_list<long long> c) {
  std::vector<Elem> v;
  for (long long x : c) v.push_back(f.from_int(x));
  return FieldPoly(FieldRing{f}, std::move(v));
}

FieldPoly random_fpoly(const Field& f, int deg, std::mt19937_64& rng) {
  std::vector<Elem> v;
  for (int i = 0; i <= deg; ++i) v.push_back(f.from_index(rng() % f.q()));
  if (v.back() == f.zero()) v.back() = f.one();
  return FieldPoly(FieldRing{f}, std::move(v));
}

// Specialize the non-eliminated variable of a bivariate polynomial at an integer.
IntPoly specialize(const BivarPoly& f, int keep_var_eliminated, long long value) {
  std::vector<BigInt> c(static_cast<std::size_t>(f.degree_in(keep_var_eliminated) + 1));
  for (const auto& [e, coef] : f.terms()) {
    const int outer = keep_var_eliminated == 0 ? e.first : e.second;
    const int inner = keep_var_eliminated == 0 ? e.second : e.first;
    BigInt v = coef;
    for (int i = 0; i < inner; ++i) v *= value;
    c[static_cast<std::size_t>(outer)] += v;
  }
  return IntPoly(IntRing{}, std::move(c));
}

BigInt eval(const IntPoly& f, long long x) {
  BigInt acc = 0;
  for (int i = f.degree(); i >= 0; --i) acc = acc * x + f.coeff(i);
  return acc;
}

}  // namespace

TEST_CASE("integer polynomial text and JSON round trip") {
  const IntPoly R = parse_int_poly(kR);
  CHECK(R.degree() == 15);
  CHECK(R.coeff(12) == -16);
  CHECK(to_string(R) == kR);
  CHECK(parse_int_poly(to_string(R)) == R);
  CHECK(int_poly_from_json(to_json(R)) == R);
  CHECK(to_json(int_poly({1, -2, 0, 3})) == nlohmann::json({1, -2, 0, 3}));
  IntPoly big(IntRing{}, {BigInt("123456789012345678901234567890"), 1});
  CHECK(int_poly_from_json(to_json(big)) == big);
  CHECK(parse_int_poly(to_string(big)) == big);
  CHECK(parse_int_poly("2*t*t + 3 - t^2") == int_poly({3, 0, 1}));
  CHECK(to_string(IntPoly()) == "0");
  CHECK_THROWS(parse_int_poly("1 + x"));
  CHECK_THROWS(parse_int_poly("1 + + t"));
}

TEST_CASE("field polynomial text and JSON round trip") {
  std::mt19937_64 rng(1);
  for (auto spec : {"7", "2^4", "5^2", "3^2/2,2,1"}) {
    Field f = Field::parse(spec);
    for (int i = 0; i < 20; ++i) {
      auto g = random_fpoly(f, 5, rng);
      CHECK(parse_field_poly(f, to_string(g)) == g);
      CHECK(field_poly_from_json(f, to_json(g)) == g);
    }
  }
  Field f7 = Field::make(7, 1);
  CHECK(to_string(fpoly(f7, {3, 6, 1})) == "3 + 6*t + t^2");
  CHECK(parse_field_poly(f7, "t^2 - t + 2") == fpoly(f7, {2, 6, 1}));
}

TEST_CASE("bivariate parsing") {
  auto f = BivarPoly::parse("-a^2 + a*b^2 - b");
  CHECK(f.degree_in(0) == 2);
  CHECK(f.degree_in(1) == 2);
  CHECK(BivarPoly::parse(f.to_string()).terms() == f.terms());
  CHECK(BivarPoly::parse("a*b - b*a").is_zero());
  CHECK_THROWS(BivarPoly::parse("a + c"));
}

TEST_CASE("resultant of the z^5 coefficient polynomials") {
  auto f1 = BivarPoly::parse("-a^2 + a*b^2 - b");
  auto f2 = BivarPoly::parse("-2*a*b + b^3 + 1");
  const IntPoly r = resultant(f1, f2, "a");
  // The exact Sylvester determinant is b^6 - 4b^3 - 1 itself; the extra b^2
  // appears when f2 is replaced by b*f2.
  CHECK(r == parse_int_poly("b^6 - 4*b^3 - 1", "b"));
  auto bf2 = BivarPoly::parse("-2*a*b^2 + b^4 + b");
  CHECK(resultant(f1, bf2, "a") == parse_int_poly("b^8 - 4*b^5 - b^2", "b"));
  auto fac = factorize(r);
  REQUIRE(fac.factors.size() == 2);
  CHECK(fac.factors[0].factor == parse_int_poly("-1 - t + t^2"));
}

TEST_CASE("resultant of the z^7 coefficient polynomials") {
  auto g1 = BivarPoly::parse("a^3 - 3*a^2*b^2 + a*b^4 + 4*a*b - b^3 - 1");
  auto g2 = BivarPoly::parse("3*a^2*b - 4*a*b^3 - 2*a + b^5 + 3*b^2");
  const IntPoly R = parse_int_poly(kR);
  CHECK(resultant(g1, g2, "b") == R);
  CHECK(resultant(g1, g2, "a") == -R);
}

TEST_CASE("bivariate resultant agrees with specialization and Euclid mod p") {
  std::mt19937_64 rng(17);
  const u64 p = 1000003;
  const ZpRing zp{p};
  for (int trial = 0; trial < 40; ++trial) {
    BivarPoly f, g;
    for (int i = 0; i < 6; ++i) {
      f.add_term(static_cast<int>(rng() % 4), static_cast<int>(rng() % 3), static_cast<long long>(rng() % 9) - 4);
      g.add_term(static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<long long>(rng() % 9) - 4);
    }
    f.add_term(4, 0, 1);
    g.add_term(3, 0, 2);
    const IntPoly r = resultant(f, g, "a");
    for (long long b = -3; b <= 3; ++b) {
      auto fs = specialize(f, 0, b), gs = specialize(g, 0, b);
      std::vector<u64> fc, gc;
      for (const auto& c : fs.coeffs()) fc.push_back(zp.from_int(c.convert_to<long long>()));
      for (const auto& c : gs.coeffs()) gc.push_back(zp.from_int(c.convert_to<long long>()));
      const u64 expect = resultant_euclid(Poly<ZpRing>(zp, fc), Poly<ZpRing>(zp, gc));
      BigInt got = eval(r, b) % p;
      if (got < 0) got += p;
      CHECK(got.convert_to<u64>() == expect);
    }
  }
}

TEST_CASE("resultant with a linear factor evaluates") {
  auto f = BivarPoly::parse("t - c", "t", "c");
  auto g = BivarPoly::parse("t^3 - 2*t + 5", "t", "c");
  CHECK(resultant(f, g, "t") == parse_int_poly("c^3 - 2*c + 5", "c"));
  for (long long c : {-3, 0, 2, 7}) CHECK(resultant(int_poly({-c, 1}), int_poly({5, -2, 0, 1})) == eval(int_poly({5, -2, 0, 1}), c));
  CHECK_THROWS_AS(resultant(BivarPoly::parse("c", "t", "c"), BivarPoly::parse("c^2", "t", "c"), "t"), std::invalid_argument);
}

TEST_CASE("resultant vanishes exactly on common factors") {
  std::mt19937_64 rng(23);
  for (auto [p, m] : std::vector<std::pair<u64, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    Field f = Field::make(p, m);
    for (int i = 0; i < 300; ++i) {
      auto a = random_fpoly(f, 1 + static_cast<int>(rng() % 3), rng);
      auto b = random_fpoly(f, 1 + static_cast<int>(rng() % 3), rng);
      const bool common = gcd(a, b).degree() > 0;
      CHECK((resultant_sylvester(a, b) == f.zero()) == common);
    }
  }
}

TEST_CASE("R factors over Z into the four stated factors") {
  const IntPoly R = parse_int_poly(kR);
  auto fac = factorize(R);
  CHECK(fac.unit == 1);
  REQUIRE(fac.factors.size() == 4);
  CHECK(fac.factors[0].factor == parse_int_poly("t^2 + t + 2"));
  CHECK(fac.factors[1].factor == parse_int_poly("t^3 - 2*t^2 - t + 1"));
  CHECK(fac.factors[2].factor == parse_int_poly("t^4 - t^3 - t^2 - 2*t + 4"));
  CHECK(fac.factors[3].factor == parse_int_poly("t^6 + 2*t^5 + 5*t^4 + 3*t^2 + t + 1"));
  for (const auto& t : fac.factors) CHECK(t.multiplicity == 1);
  CHECK(product(fac) == R);
}

TEST_CASE("integer factorization is consistent under products") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<IntPoly> parts;
    IntPoly prod = int_poly({static_cast<long long>(rng() % 3) + 1});
    std::map<std::vector<BigInt>, int> expected;
    for (int k = 0; k < 3; ++k) {
      std::vector<BigInt> c;
      const int d = 1 + static_cast<int>(rng() % 3);
      for (int i = 0; i <= d; ++i) c.emplace_back(static_cast<long long>(rng() % 7) - 3);
      if (c.back() == 0) c.back() = 1;
      IntPoly g(IntRing{}, c);
      prod = prod * g;
      for (const auto& t : factorize(g).factors) expected[t.factor.coeffs()] += t.multiplicity;
    }
    if (prod.is_zero()) continue;
    auto fac = factorize(prod);
    CHECK(product(fac) == prod);
    std::map<std::vector<BigInt>, int> got;
    for (const auto& t : fac.factors) got[t.factor.coeffs()] += t.multiplicity;
    CHECK(got == expected);
  }
  CHECK(factorize(int_poly({0, 0, 3})).factors.size() == 1);
  CHECK(factorize(int_poly({0, 0, 3})).factors[0].multiplicity == 2);
  CHECK(factorize(int_poly({0, 0, 3})).unit == 3);
  CHECK_THROWS(factorize(IntPoly()));
}

TEST_CASE("t^6 - 4t^3 - 1 over fields containing omega") {
  for (auto [p, m] : std::vector<std::pair<u64, int>>{{2, 2}, {7, 1}, {13, 1}, {5, 2}, {2, 4}, {11, 2}}) {
    Field f = Field::make(p, m);
    auto omegas = f.elements_of_order(3);
    REQUIRE(omegas.size() == 2);
    const Elem w = omegas[0], w2 = f.mul(w, w);
    const FieldRing R{f};
    FieldPoly q1(R, {f.from_int(-1), f.from_int(-1), f.one()});
    FieldPoly q2(R, {f.neg(w2), f.neg(w), f.one()});
    FieldPoly q3(R, {f.neg(w), f.neg(w2), f.one()});
    auto target = reduce_mod(parse_int_poly("t^6 - 4*t^3 - 1"), f);
    CHECK(q1 * q2 * q3 == target);
    std::map<std::vector<Elem>, int> expected, got;
    for (const auto& q : {q1, q2, q3})
      for (const auto& t : factorize(q)) expected[t.factor.coeffs()] += t.multiplicity;
    for (const auto& t : factorize(target)) got[t.factor.coeffs()] += t.multiplicity;
    CHECK(got == expected);
  }
}

TEST_CASE("factorization over finite fields") {
  Field f3 = Field::make(3, 1);
  auto sq = factorize(fpoly(f3, {0, 0, 1}));
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].factor == fpoly(f3, {0, 1}));
  CHECK(sq[0].multiplicity == 2);

  std::mt19937_64 rng(41);
  for (auto [p, m] : std::vector<std::pair<u64, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}, {7, 1}}) {
    Field f = Field::make(p, m);
    const FieldRing R{f};
    const auto t = FieldPoly::var(R);
    for (int i = 0; i < 30; ++i) {
      auto g = make_monic(random_fpoly(f, 1 + static_cast<int>(rng() % 8), rng));
      auto fac = factorize(g);
      FieldPoly prod = FieldPoly::constant(R, f.one());
      for (const auto& ft : fac) {
        for (int k = 0; k < ft.multiplicity; ++k) prod = prod * ft.factor;
        CHECK(is_irreducible(ft.factor));
        // no roots in GF(q^d) for d below the degree
        auto h = t;
        for (int d = 1; d < ft.factor.degree() && ft.factor.degree() <= 6; ++d) {
          h = powmod(h, f.q(), ft.factor);
          CHECK(gcd(ft.factor, h - t).degree() == 0);
        }
      }
      CHECK(prod == g);
    }
  }
  CHECK_THROWS(factorize(FieldPoly(FieldRing{f3})));
}

TEST_CASE("gcd_coprime") {
  Field f7 = Field::make(7, 1);
  auto mc = parse_field_poly(f7, "t^2 + 6*t + 3");
  auto sext = reduce_mod(parse_int_poly("t^6 - 4*t^3 - 1"), f7);
  CHECK(gcd_coprime(mc, sext).second);
  auto [d, cop] = gcd_coprime(sext, sext);
  CHECK_FALSE(cop);
  CHECK(d == make_monic(sext));

  Field f2 = Field::make(2, 1);
  CHECK(gcd_coprime(parse_field_poly(f2, "t^4 + t^3 + 1"), reduce_mod(parse_int_poly(kR), f2)).second);
  CHECK_THROWS(gcd_coprime(FieldPoly(FieldRing{f2}), FieldPoly(FieldRing{f2})));
}

TEST_CASE("splitting field of R contains the required roots of unity") {
  const IntPoly R = parse_int_poly(kR);
  auto r5 = splitting_order_check(R, 5);
  CHECK(r5.verdict);
  CHECK(r5.data["required_order"] == 21);
  auto r3 = splitting_order_check(R, 3);
  CHECK(r3.data["required_order"] == 7);
  auto r7 = splitting_order_check(R, 7);
  CHECK(r7.data["required_order"] == 3);
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43}) {
    auto r = splitting_order_check(R, p);
    CHECK_MESSAGE(r.verdict, "p = " << p);
  }
  CHECK_THROWS(splitting_order_check(int_poly({7, 14}), 7));
}
