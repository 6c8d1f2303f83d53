#include "doctest.h"
#include "gen23/paperlib.hpp"
#include "gen23/reptools.hpp"

using namespace gen23;

namespace {

std::vector<Field> fields_up_to(u64 qmax) {
  std::vector<Field> out;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23})
    for (int m = 1; ; ++m) {
      u64 q = 1;
      for (int i = 0; i < m; ++i) q *= p;
      if (q > qmax) break;
      out.push_back(Field::make(p, m));
    }
  return out;
}

// Independent of reptools: every relation g^T J g^tau = lambda_g J.
bool satisfies(const std::vector<Matrix>& gens, const FormSolution& s, const Matrix& J) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Matrix& g = gens[i];
    const Matrix h = s.twist == Twist::Sigma ? g.sigma() : g;
    if (!(g.transpose() * J * h == J.scaled(s.character[i]))) return false;
  }
  return true;
}

bool hermitian_up_to_scalar(const Matrix& J) {
  const Field& f = J.field();
  for (u64 i = 1; i < f.q(); ++i) {
    const Matrix K = J.scaled(f.from_index(i));
    if (K.transpose() == K.sigma()) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("commutant dimension") {
  const Field f7 = Field::make(7, 1);
  CHECK(commutant_dimension({Matrix::identity(f7, 3)}) == 9);
  CHECK(commutant_dimension(build_dim3(f7, f7.zero(), f7.one()).gens()) == 1);
  const Field f5 = Field::make(5, 1);
  const auto g = build_dim3(f5, f5.from_int(2), f5.from_int(2));
  const auto v = meataxe_irreducible(g.gens());
  CHECK((!v.irreducible || commutant_dimension(g.gens()) >= 2));
  CHECK_FALSE(v.absolutely_irreducible);
  CHECK_THROWS_AS(commutant_dimension({}), std::invalid_argument);
}

TEST_CASE("meataxe witnesses for the reducible loci") {
  const Field f = Field::make(7, 1);
  const Elem a = f.from_int(3);
  const Elem b = f.sub(f.neg(a), f.from_int(2));
  const auto g = build_dim3(f, a, b);
  const auto v = meataxe_irreducible(g.gens());
  REQUIRE_FALSE(v.irreducible);
  CHECK(is_invariant(g.gens(), v.witness));
  CHECK(!v.witness.empty());
  CHECK(v.witness.size() < 3);
  // w = (1,1,1) is fixed by the transposes, so its annihilator is a submodule
  const auto plane = nullspace(f, {{f.one(), f.one(), f.one()}}, 3);
  CHECK(plane.size() == 2);
  CHECK(is_invariant(g.gens(), plane));

  // dim 5 with gamma = 1: (b,c) = (3, -3)
  const auto h = build_dim5(f, f.from_int(3), f.from_int(-3));
  const auto v5 = meataxe_irreducible(h.gens());
  REQUIRE_FALSE(v5.irreducible);
  CHECK(is_invariant(h.gens(), v5.witness));
  const Vec w{f.one(), f.neg(f.one()), f.one(), f.neg(f.one()), f.zero()};
  const auto ww = spin(h.gens(), {w});
  CHECK(ww.size() == 2);
  CHECK(in_span(f, ww, h.y * w));

  const Field f3 = Field::make(3, 1);
  const auto s = meataxe_irreducible(build_dim3(f3, f3.one(), f3.from_int(2)).gens());
  CHECK(s.irreducible);
  CHECK(s.absolutely_irreducible);

  CHECK(meataxe_irreducible({Matrix::identity(f, 1)}).absolutely_irreducible);
  const auto id = meataxe_irreducible({Matrix::identity(f, 3)});
  CHECK_FALSE(id.irreducible);
  CHECK(id.witness.size() >= 1);
}

TEST_CASE("brute submodules") {
  const Field f = Field::make(5, 1);
  const auto all = brute_submodules_dim3({Matrix::identity(f, 3), Matrix::identity(f, 3)});
  CHECK(all.size() == 2 * (25 + 5 + 1));
  CHECK(brute_submodules_dim3(build_dim3(f, f.zero(), f.one()).gens()).empty());
  CHECK_THROWS_AS(brute_submodules_dim3({Matrix::identity(f, 4)}), std::invalid_argument);
  CHECK_THROWS_AS(brute_submodules_dim3({Matrix::identity(Field::make(2, 7), 3)}), std::invalid_argument);

  // p = 2, b = -a w - 2 w^2 with a = w
  const Field f4 = Field::make(2, 2);
  const Elem w = f4.generator_t();
  const Elem b = f4.sub(f4.neg(f4.mul(w, w)), f4.mul(f4.from_int(2), f4.mul(w, w)));
  const auto g = build_dim3(f4, w, b);
  const auto subs = brute_submodules_dim3(g.gens());
  const auto v = meataxe_irreducible(g.gens());
  REQUIRE_FALSE(v.irreducible);
  REQUIRE_FALSE(subs.empty());
  bool listed = false;
  for (const auto& s : subs) {
    CHECK(is_invariant(g.gens(), s));
    if (s.size() == v.witness.size() && rank(f4, [&] {
          auto u = s;
          u.insert(u.end(), v.witness.begin(), v.witness.end());
          return u;
        }()) == static_cast<int>(s.size()))
      listed = true;
  }
  CHECK(listed);
}

TEST_CASE("meataxe agrees with exhaustive enumeration for q <= 25") {
  for (const Field& f : fields_up_to(25)) {
    CAPTURE(f.to_string());
    int disagreements = 0, bad_witness = 0, bad_factor = 0;
    for (u64 i = 0; i < f.q(); ++i)
      for (u64 j = 0; j < f.q(); ++j) {
        if (i == 0 && j == 0) continue;
        const auto g = build_dim3(f, f.from_index(i), f.from_index(j));
        const auto v = meataxe_irreducible(g.gens());
        const bool brute_irred = brute_submodules_dim3(g.gens()).empty();
        if (v.irreducible != brute_irred) ++disagreements;
        if (!v.irreducible && !is_invariant(g.gens(), v.witness)) ++bad_witness;
        if (v.absolutely_irreducible && invariant_factors(g.z()).size() != 1) ++bad_factor;
      }
    CHECK(disagreements == 0);
    CHECK(bad_witness == 0);
    CHECK(bad_factor == 0);
  }
}

TEST_CASE("dim 5 verdicts carry invariant witnesses and single invariant factors") {
  for (const Field& f : fields_up_to(4)) {
    for (u64 i = 0; i < f.q(); ++i)
      for (u64 j = 1; j < f.q(); ++j) {
        const auto g = build_dim5(f, f.from_index(i), f.from_index(j));
        const auto v = meataxe_irreducible(g.gens());
        if (!v.irreducible) CHECK(is_invariant(g.gens(), v.witness));
        if (v.absolutely_irreducible) CHECK(invariant_factors(g.z()).size() == 1);
      }
  }
}

TEST_CASE("hermitian forms exactly when b = a^q, q^2 <= 49") {
  for (const Field& f : fields_up_to(49)) {
    if (!f.is_square_extension()) continue;
    CAPTURE(f.to_string());
    int mismatches = 0, schur = 0, relations = 0, shape = 0;
    for (u64 i = 0; i < f.q(); ++i)
      for (u64 j = 0; j < f.q(); ++j) {
        if (i == 0 && j == 0) continue;
        const Elem a = f.from_index(i), b = f.from_index(j);
        const auto g = build_dim3(f, a, b);
        if (!meataxe_irreducible(g.gens()).absolutely_irreducible) continue;
        const auto sols = invariant_forms(g.gens(), Twist::Sigma, false);
        REQUIRE(sols.size() == 1);
        if (has_nondegenerate_form(sols) != (b == f.sigma(a))) ++mismatches;
        if (sols[0].basis.size() > 1) ++schur;
        for (const auto& J : sols[0].basis) {
          if (!satisfies(g.gens(), sols[0], J)) ++relations;
          if (!hermitian_up_to_scalar(J)) ++shape;
        }
      }
    CHECK(mismatches == 0);
    CHECK(schur == 0);
    CHECK(relations == 0);
    CHECK(shape == 0);
  }
}

TEST_CASE("orthogonal forms exactly when b = a for odd q <= 7") {
  for (const Field& f : fields_up_to(7)) {
    if (f.p() == 2) continue;
    CAPTURE(f.to_string());
    int mismatches = 0;
    for (u64 i = 0; i < f.q(); ++i)
      for (u64 j = 0; j < f.q(); ++j) {
        if (i == 0 && j == 0) continue;
        const Elem a = f.from_index(i), b = f.from_index(j);
        const auto g = build_dim3(f, a, b);
        if (!meataxe_irreducible(g.gens()).absolutely_irreducible) continue;
        const auto sols = invariant_forms(g.gens(), Twist::Identity, false);
        if (has_nondegenerate_form(sols) != (a == b)) ++mismatches;
        for (const auto& J : sols[0].basis) CHECK(J.transpose() == J);
      }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("no forms up to scalars when a = 0") {
  for (const Field& f : fields_up_to(49)) {
    for (u64 j = 1; j < f.q(); ++j) {
      const auto g = build_dim3(f, f.zero(), f.from_index(j));
      if (!meataxe_irreducible(g.gens()).absolutely_irreducible) continue;
      const auto orth = invariant_forms(g.gens(), Twist::Identity, true);
      CHECK_FALSE(has_nondegenerate_form(orth));
      for (const auto& s : orth) {
        CHECK(s.basis.size() <= 1);
        for (const auto& J : s.basis) CHECK(satisfies(g.gens(), s, J));
      }
      if (f.is_square_extension()) CHECK_FALSE(has_nondegenerate_form(invariant_forms(g.gens(), Twist::Sigma, true)));
    }
  }
}

TEST_CASE("dim 5 forms") {
  for (const Field& f : fields_up_to(25)) {
    if (!f.is_square_extension()) continue;
    CAPTURE(f.to_string());
    for (u64 j = 1; j < f.q(); ++j) {
      const Elem c = f.from_index(j);
      const Elem b = f.sub(f.sub(f.sigma(c), c), f.one());
      const auto g = build_dim5(f, b, c);
      if (!meataxe_irreducible(g.gens()).absolutely_irreducible) continue;
      const auto sols = invariant_forms(g.gens(), Twist::Sigma, false);
      CHECK(has_nondegenerate_form(sols));
      CHECK(sols[0].basis.size() == 1);
    }
  }
  for (const Field& f : fields_up_to(5)) {
    if (f.p() == 2) continue;
    CAPTURE(f.to_string());
    int mismatches = 0;
    for (u64 i = 0; i < f.q(); ++i)
      for (u64 j = 1; j < f.q(); ++j) {
        const Elem b = f.from_index(i);
        const auto g = build_dim5(f, b, f.from_index(j));
        if (!meataxe_irreducible(g.gens()).absolutely_irreducible) continue;
        if (has_nondegenerate_form(invariant_forms(g.gens(), Twist::Identity, false)) != (b == f.neg(f.one())))
          ++mismatches;
        const auto up = invariant_forms(g.gens(), Twist::Identity, true);
        for (const auto& s : up) {
          CHECK(s.basis.size() <= 1);
          // odd dimension: only the trivial character survives
          for (Elem l : s.character) CHECK(l == f.one());
        }
      }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("forms: errors and degenerate input") {
  const Field f = Field::make(7, 1);
  CHECK_THROWS_AS(invariant_forms({Matrix::identity(f, 3)}, Twist::Sigma, false), std::invalid_argument);
  const auto s = invariant_forms({Matrix::identity(f, 3)}, Twist::Identity, false);
  REQUIRE(s.size() == 1);
  CHECK(s[0].basis.size() == 9);
  CHECK(s[0].nondegenerate.has_value());
  const auto j = to_json(s[0]);
  CHECK(j["dimension"] == 9);
  CHECK(j["twist"] == "id");
  const auto v = to_json(meataxe_irreducible({Matrix::identity(f, 2)}), f);
  CHECK(v["irreducible"] == false);
  CHECK(v["witness"].size() >= 1);
}
