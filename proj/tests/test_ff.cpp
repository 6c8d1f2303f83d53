#include <random>

#include "doctest.h"
#include "gen23/ff.hpp"
#include "gen23/poly.hpp"

using namespace gen23;

namespace {

// Independent oracle: multiply coefficient vectors as polynomials mod the modulus.
Elem slow_mul(const Field& f, Elem a, Elem b) {
  const ZpRing zp{f.p()};
  std::vector<u64> ma(f.modulus().begin(), f.modulus().end());
  auto ca = f.coeffs(a), cb = f.coeffs(b);
  Poly<ZpRing> pa(zp, {ca.begin(), ca.end()}), pb(zp, {cb.begin(), cb.end()});
  auto r = (pa * pb) % Poly<ZpRing>(zp, ma);
  std::vector<u64> c(r.coeffs().begin(), r.coeffs().end());
  return f.from_coeffs(c);
}

Elem slow_add(const Field& f, Elem a, Elem b) {
  auto ca = f.coeffs(a), cb = f.coeffs(b);
  std::vector<u64> c(ca.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (ca[i] + cb[i]) % f.p();
  return f.from_coeffs(c);
}

u64 brute_order(const Field& f, Elem a) {
  Elem x = a;
  u64 k = 1;
  while (x != f.one()) {
    x = slow_mul(f, x, a);
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("number theory primitives") {
  CHECK(is_prime(2));
  CHECK(is_prime(1000000007ULL));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(561));
  CHECK(is_prime(2305843009213693951ULL));  // 2^61 - 1
  CHECK(factorize(1048575) == Factorization{{3, 1}, {5, 2}, {11, 1}, {31, 1}, {41, 1}});
  CHECK(factorize(600851475143ULL) == factorize_trial(600851475143ULL));
  CHECK(euler_phi(8) == 4);
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(42) == 12);
  CHECK_THROWS(euler_phi(0));
  // 8 is the equality case: phi(8)^3 = 64 = 8^2.
  CHECK_FALSE(phi_exceeds_two_thirds(8, 4));
  CHECK(phi_n2_minus_1(14) == 96);
}

TEST_CASE("phi is multiplicative on coprime pairs") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<u64> d(1, 1000000);
  int tested = 0;
  while (tested < 500) {
    u64 a = d(rng), b = d(rng);
    if (gcd_u64(a, b) != 1) continue;
    CHECK(euler_phi(a * b) == euler_phi(a) * euler_phi(b));
    ++tested;
  }
}

TEST_CASE("phi lemma and corollary") {
  auto r = check_phi_lemma(1, 100);
  CHECK(r.verdict);
  CHECK(r.data["exceptions"] == nlohmann::json({1, 2, 3, 4, 6, 8, 10, 12, 18, 24, 30, 42}));
  CHECK(r.data["equalities"] == nlohmann::json({1, 8}));
  auto c = check_phi_corollary(13, 14);
  CHECK(c.verdict);
  CHECK(c.data["checked"] == 1);  // n = 13 is below the threshold
  CHECK(check_phi_bounds(1, 2000).verdict);
}

TEST_CASE("field construction") {
  SUBCASE("F9 with alpha^2 = alpha + 1") {
    Field f9 = Field::make(3, 2, std::vector<u64>{2, 2, 1});
    CHECK(f9.q() == 9);
    Elem alpha = f9.generator_t();
    CHECK(f9.mul(alpha, alpha) == f9.add(alpha, f9.one()));
    CHECK(f9.order(alpha) == 8);
    CHECK(brute_order(f9, alpha) == 8);
    Elem cube = slow_mul(f9, slow_mul(f9, alpha, alpha), alpha);
    CHECK(f9.frobenius(alpha) == cube);
    CHECK(f9.sigma(alpha) == cube);
  }
  SUBCASE("prime field default modulus is t") {
    Field f2 = Field::make(2, 1);
    CHECK(f2.modulus() == std::vector<std::uint32_t>{0, 1});
    CHECK(f2.q() == 2);
    CHECK(f2.order(f2.one()) == 1);
  }
  SUBCASE("explicit F16 modulus") {
    Field f16 = Field::make(2, 4, std::vector<u64>{1, 1, 0, 0, 1});
    CHECK(f16.order(f16.generator_t()) == 15);
  }
  SUBCASE("default modulus is the smallest from the constant term upward") {
    CHECK(Field::make(2, 4).modulus() == std::vector<std::uint32_t>{1, 0, 0, 1, 1});
    CHECK(Field::make(5, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(Field::make(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 2, std::vector<u64>{1, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 3, std::vector<u64>{1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 21), std::invalid_argument);
  }
}

TEST_CASE("field arithmetic agrees with polynomial arithmetic") {
  std::mt19937_64 rng(11);
  for (auto [p, m] : std::vector<std::pair<u64, int>>{{2, 1}, {2, 3}, {3, 2}, {5, 2}, {7, 1}, {3, 3}, {2, 6}, {7, 2}, {13, 1}}) {
    Field f = Field::make(p, m);
    for (int i = 0; i < 300; ++i) {
      Elem a = f.from_index(rng() % f.q()), b = f.from_index(rng() % f.q());
      CHECK(f.mul(a, b) == slow_mul(f, a, b));
      CHECK(f.add(a, b) == slow_add(f, a, b));
      CHECK(f.add(f.sub(a, b), b) == a);
      if (b != f.zero()) CHECK(f.mul(f.div(a, b), b) == a);
    }
  }
}

TEST_CASE("element order invariants") {
  for (auto [p, m] : std::vector<std::pair<u64, int>>{{2, 4}, {3, 2}, {5, 2}, {7, 1}, {2, 6}}) {
    Field f = Field::make(p, m);
    for (u64 i = 1; i < f.q(); ++i) {
      Elem a = f.from_index(i);
      const u64 k = f.order(a);
      CHECK(f.pow(a, static_cast<long long>(k)) == f.one());
      for (u64 d : divisors(factorize(k)))
        if (d < k) CHECK(f.pow(a, static_cast<long long>(d)) != f.one());
    }
  }
  Field f4 = Field::make(2, 2);
  CHECK(f4.order(f4.generator_t()) == 3);
  CHECK_THROWS(f4.order(f4.zero()));
}

TEST_CASE("frobenius is an automorphism and sigma is an involution") {
  std::mt19937_64 rng(3);
  for (auto [p, m] : std::vector<std::pair<u64, int>>{{2, 2}, {3, 2}, {5, 2}, {2, 4}, {7, 2}, {3, 4}}) {
    Field f = Field::make(p, m);
    for (int i = 0; i < 200; ++i) {
      Elem a = f.from_index(rng() % f.q()), b = f.from_index(rng() % f.q());
      CHECK(f.sigma(f.add(a, b)) == f.add(f.sigma(a), f.sigma(b)));
      CHECK(f.sigma(f.mul(a, b)) == f.mul(f.sigma(a), f.sigma(b)));
      CHECK(f.sigma(f.sigma(a)) == a);
    }
  }
  Field f4 = Field::make(2, 2);
  Elem w = f4.generator_t();
  CHECK(f4.sigma(w) == f4.mul(w, w));
  Field f7 = Field::make(7, 1);
  CHECK(f7.frobenius(f7.from_int(3)) == f7.from_int(3));
  CHECK_THROWS(Field::make(2, 3).sigma(Elem{1}));
}

TEST_CASE("subfield generated") {
  Field f4 = Field::make(2, 2);
  Elem w = f4.primitive();
  CHECK(f4.subfield_generated(f4.pow(w, 3)).size == 2);
  CHECK(f4.subfield_generated(w).size == 4);

  Field f16 = Field::make(2, 4);
  Elem a = f16.primitive();
  CHECK(f16.order(a) == 15);
  CHECK(f16.subfield_generated(f16.pow(a, 5)).size == 4);
  CHECK(f16.subfield_generated(f16.pow(a, 3)).size == 16);

  Field f8 = Field::make(2, 3);
  CHECK(f8.subfield_generated(f8.pow(f8.primitive(), 3)).size == 8);

  // size == q iff the minimal polynomial has full degree
  Field f81 = Field::make(3, 4);
  for (u64 i = 0; i < f81.q(); ++i) {
    Elem e = f81.from_index(i);
    CHECK((f81.subfield_generated(e).size == 81) == (f81.degree_over_prime(e) == 4));
  }
}

TEST_CASE("subfield lemma, small range") {
  auto r = check_subfield_lemma(300);
  CHECK(r.verdict);
  CHECK(r.data["exceptions_s3_s5"].size() == 2);
}

TEST_CASE("field and element text round trip") {
  std::mt19937_64 rng(5);
  for (auto spec : {"2", "3^2/2,2,1", "2^4/1,1,0,0,1", "5^2", "7^3"}) {
    Field f = Field::parse(spec);
    Field g = Field::parse(f.to_string());
    CHECK(f == g);
    for (int i = 0; i < 50; ++i) {
      Elem a = f.from_index(rng() % f.q());
      CHECK(f.parse_element(f.format(a)) == a);
    }
  }
  CHECK(Field::parse("3^2/2,2,1").to_string() == "3^2/2,2,1");
  CHECK_THROWS(Field::parse("x^2"));
}

TEST_CASE("embeddings") {
  Field f4 = Field::make(2, 2), f16 = Field::make(2, 4);
  auto emb = FieldEmbedding::find(f4, f16);
  std::mt19937_64 rng(9);
  for (u64 i = 0; i < 4; ++i)
    for (u64 j = 0; j < 4; ++j) {
      Elem a{static_cast<std::uint32_t>(i)}, b{static_cast<std::uint32_t>(j)};
      CHECK(emb(f4.mul(a, b)) == f16.mul(emb(a), emb(b)));
      CHECK(emb(f4.add(a, b)) == f16.add(emb(a), emb(b)));
    }
  Field f5 = Field::make(5, 1);
  Field e = extension_containing_order(f5, 3);
  CHECK(e.q() == 25);
  CHECK(extension_containing_order(Field::make(7, 1), 3).q() == 7);
  CHECK_THROWS(FieldEmbedding::find(Field::make(2, 3), f16));
}
