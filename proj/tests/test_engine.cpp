#include <numeric>

#include "doctest.h"
#include "gen23/engine.hpp"

using namespace gen23;

namespace {

Matrix perm(const Field& f, std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  Matrix m(f, n);
  for (int i = 0; i < n; ++i) m(images[static_cast<std::size_t>(i)], i) = f.one();
  return m;
}

}  // namespace

TEST_CASE("closure basics") {
  const Field f2 = Field::make(2, 1);
  CHECK(closure({Matrix::identity(f2, 3)}).order == 1);
  CHECK_THROWS_AS(closure({}), std::invalid_argument);
  CHECK_THROWS_AS(closure({Matrix(f2, 3)}), std::invalid_argument);
  CHECK_THROWS_AS(closure({Matrix::identity(f2, 3), Matrix::identity(f2, 2)}), std::invalid_argument);

  const auto g = build_dim3(f2, f2.one(), f2.zero());
  const auto c = closure(g.gens());
  CHECK(c.order == 168);
  CHECK(c.key_width == "u64");
  CHECK(c.scalar_subgroup_order == 1);
  CHECK(closure({g.y, g.x}).order == 168);
  CHECK(closure({g.x.inverse(), g.y.inverse()}).order == 168);
  CHECK(c.order % std::lcm(element_order(g.x).value(), element_order(g.y).value()) == 0);

  ClosureOptions small;
  small.cap = 100;
  const auto t = closure(g.gens(), small);
  CHECK(t.truncated);
  CHECK(t.order == 101);

  ClosureOptions keep;
  keep.keep_elements = true;
  const auto k = closure({g.y}, keep);
  REQUIRE(k.elements.size() == 3);
  CHECK(k.elements[0].is_identity());
}

TEST_CASE("wide keys") {
  const Field f8 = Field::make(2, 3);
  const auto s5 = closure({perm(f8, {1, 2, 3, 4, 0}), perm(f8, {1, 0, 2, 3, 4})});
  CHECK(s5.key_width == "u128");
  CHECK(s5.order == 120);
  const Field f64 = Field::make(2, 6);
  const auto b5 = closure({perm(f64, {1, 2, 3, 4, 0}), perm(f64, {1, 0, 2, 3, 4})});
  CHECK(b5.key_width == "bytes");
  CHECK(b5.order == 120);
  // scalars in the closure
  const Field f7 = Field::make(7, 1);
  const auto sc = closure({Matrix::scalar(f7, 3, f7.from_int(2)), perm(f7, {1, 2, 0})});
  CHECK(sc.order == 9);
  CHECK(sc.scalar_subgroup_order == 3);
}

TEST_CASE("target orders") {
  CHECK(target_order(Family::SL, 3, 2).expected_order == 168);
  const auto u = target_order(Family::SU, 3, 2);
  CHECK(u.expected_order == 216);
  CHECK(u.center_order == 3);
  CHECK(u.projective_order() == 72);
  CHECK(target_order(Family::SL, 5, 2).expected_order == 9999360);
  const std::vector<std::pair<u64, long long>> sl3{{3, 5616}, {4, 60480}, {5, 372000}, {7, 5630688}, {8, 16482816}, {9, 42456960}};
  for (auto [q, o] : sl3) CHECK(target_order(Family::SL, 3, q).expected_order == o);
  CHECK(target_order(Family::SU, 3, 4).expected_order == 62400);
  CHECK(target_order(Family::SU, 3, 7).expected_order == 5663616);
  CHECK(target_order(Family::SU, 3, 3).projective_order() == 6048);
  CHECK(target_order(Family::SL, 3, 4).projective_order() == 20160);
  CHECK(target_order(Family::SL, 5, 16).center_order == 5);
  CHECK(target_order(Family::SU, 5, 4).center_order == 5);
  CHECK(target_for(Target::SU3, 5).name() == "SU3(5^2)");
  CHECK(target_for(Target::SU3, 5).field().q() == 25);
  CHECK_THROWS_AS(target_order(Family::SL, 3, 6), std::invalid_argument);
  CHECK_THROWS_AS(target_order(Family::SL, 1, 2), std::invalid_argument);
  const auto j = to_json(target_order(Family::SL, 5, 16));
  CHECK(j["expected_order"].is_string());
}

TEST_CASE("classical generators enumerate the full group") {
  for (auto [fam, q] : std::vector<std::pair<Family, u64>>{{Family::SL, 2}, {Family::SL, 3}, {Family::SL, 4},
                                                           {Family::SU, 2}, {Family::SU, 3}, {Family::SU, 4}}) {
    const auto t = target_order(fam, 3, q);
    CAPTURE(t.name());
    const auto gens = classical_generators(t);
    for (const auto& g : gens) CHECK(g.det() == g.field().one());
    CHECK(BigInt(closure(gens).order) == t.expected_order);
  }
  CHECK_THROWS_AS(classical_generators(target_order(Family::SU, 5, 2)), std::invalid_argument);
}

TEST_CASE("generation certificates") {
  const auto f5 = Field::make(5, 1);
  const auto w = search_params(Target::SL3, f5);
  REQUIRE(w);
  const auto r = verify_generation(*w, Target::SL3, target_for(Target::SL3, 5));
  CHECK(r.verdict);
  CHECK(r.data["mode"] == "full");
  CHECK(r.data["closure"]["order"] == 372000);
  CHECK(r.data["xy6_nonscalar"] == true);

  const auto f16 = Field::make(2, 4);
  const auto s = search_params(Target::SL5, f16, 15);
  REQUIRE(s);
  VerifyOptions o41;
  o41.witness_divisor = 41;
  const auto p = verify_generation(*s, Target::SL5, target_for(Target::SL5, 16), o41);
  CHECK(p.data["mode"] == "partial");
  CHECK(p.data["checks"]["divisible"] == true);
  CHECK(p.verdict);

  const auto u = search_params(Target::SU5, f16);
  REQUIRE(u);
  VerifyOptions o17;
  o17.witness_divisor = 17;
  const auto pu = verify_generation(*u, Target::SU5, target_for(Target::SU5, 4), o17);
  CHECK(pu.data["checks"]["divisible"] == true);
  CHECK(pu.data["checks"]["hermitian_form"] == true);
  CHECK(pu.verdict);

  const auto f4 = Field::make(2, 2);
  const auto s4 = search_params(Target::SL5, f4);
  REQUIRE(s4);
  const auto p4 = verify_generation(*s4, Target::SL5, target_for(Target::SL5, 4));
  CHECK(p4.data["mode"] == "partial");
  CHECK(p4.data["checks"]["no_orthogonal_form"] == true);
  CHECK(p4.data["checks"]["no_hermitian_form"] == true);
  CHECK(p4.verdict);

  // a proper subgroup fails the full certificate
  SearchResult bad{f5.one(), build_dim3(f5, f5.one(), f5.one()), {}, false, ""};
  CHECK_FALSE(verify_generation(bad, Target::SL3, target_for(Target::SL3, 5)).verdict);
}

TEST_CASE("non-generation scans") {
  const auto c4 = nongeneration_scan(target_order(Family::SU, 3, 2), ScanMode::AllPairs);
  CHECK(c4.verdict);
  CHECK(c4.group_elements == 216);
  CHECK_FALSE(c4.generating_pair_found);
  CHECK(c4.involution_classes >= 1);
  for (const auto& sc : c4.cases) CHECK(72 % sc.order == 0);

  const auto t9 = target_order(Family::SU, 3, 3);
  const auto c9 = nongeneration_scan(t9, ScanMode::AllPairs);
  CHECK(c9.verdict);
  CHECK(c9.group_elements == 6048);

  const auto k9 = nongeneration_scan(t9, ScanMode::Canonical);
  CHECK(k9.verdict);
  CHECK(k9.cases.size() == 8);
  int psl = 0;
  for (const auto& sc : k9.cases)
    if (sc.label == "PSL2(7)") {
      ++psl;
      CHECK(sc.order == 168);
    }
  CHECK(psl == 2);
  for (const auto& sc : k9.cases) {
    if (sc.in_target) CHECK(6048 % sc.order == 0);
    else CHECK(sc.label == "reducible");
  }

  const auto k4 = nongeneration_scan(target_order(Family::SU, 3, 2), ScanMode::Canonical);
  CHECK(k4.verdict);
  CHECK_THROWS_AS(nongeneration_scan(target_order(Family::SL, 3, 4), ScanMode::Canonical), std::invalid_argument);
  ScanOptions tiny;
  tiny.cap = 100;
  CHECK_THROWS_AS(nongeneration_scan(t9, ScanMode::AllPairs, tiny), CapExceeded);

  // a generating group is reported, not swallowed
  const auto c3 = nongeneration_scan(target_order(Family::SL, 3, 3), ScanMode::AllPairs);
  CHECK(c3.generating_pair_found);
  CHECK_FALSE(c3.verdict);
  const auto j = to_json(c3);
  CHECK(j["mode"] == "all-pairs");
  CHECK(j["verdict"] == false);
}
