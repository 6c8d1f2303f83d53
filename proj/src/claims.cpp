#include "gen23/claims.hpp"

#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>

#include "gen23/engine.hpp"
#include "gen23/ff.hpp"
#include "gen23/paperlib.hpp"
#include "gen23/polyring.hpp"
#include "gen23/reptools.hpp"

namespace gen23 {

namespace {

using nlohmann::json;

const char* kR = "8 - 37*t^3 - 67*t^6 + 59*t^9 - 16*t^12 + t^15";
const char* kSextic = "t^6 - 4*t^3 - 1";

std::vector<Field> fields_up_to(u64 qmax) {
  std::vector<Field> out;
  for (u64 p = 2; p <= qmax; ++p) {
    if (!is_prime(p)) continue;
    u64 q = p;
    for (int m = 1; q <= qmax; ++m, q *= p) out.push_back(Field::make(p, m));
  }
  return out;
}

// Visits every (i, j) index pair, skipping (0, 0) and, if requested, j = 0.
template <class F>
void for_pairs(const Field& f, bool second_nonzero, F&& fn) {
  for (u64 i = 0; i < f.q(); ++i)
    for (u64 j = second_nonzero ? 1 : 0; j < f.q(); ++j) {
      if (i == 0 && j == 0) continue;
      fn(f.from_index(i), f.from_index(j));
    }
}

bool abs_irreducible(const GeneratorPair& g) { return meataxe_irreducible(g.gens()).absolutely_irreducible; }

ClaimReport make(std::string id, std::string label) {
  ClaimReport r;
  r.id = std::move(id);
  r.label = std::move(label);
  r.verdict = true;
  return r;
}

// Sums integer counters in per-field rows and fails if any named counter is nonzero.
void finish(ClaimReport& r, const std::vector<std::string>& must_be_zero) {
  for (const auto& row : r.data["fields"])
    for (const auto& k : must_be_zero)
      if (row.contains(k) && row[k].get<u64>() != 0) r.verdict = false;
}

ClaimReport lemma31(u64 qmax) {
  auto r = make("lemma-3.1", "Lemma 3.1");
  r.data["scope"] = "every (a,b) != (0,0), q <= " + std::to_string(qmax);
  for (const Field& f : fields_up_to(qmax)) {
    u64 pairs = 0, mismatches = 0, irreducible = 0;
    for_pairs(f, false, [&](Elem a, Elem b) {
      ++pairs;
      const bool predicted = dim3_irreducibility_conditions(f, a, b).overall();
      const bool actual = abs_irreducible(build_dim3(f, a, b));
      irreducible += actual;
      mismatches += predicted != actual;
    });
    r.data["fields"].push_back({{"field", f.to_string()}, {"pairs", pairs}, {"absolutely_irreducible", irreducible},
                                {"mismatches", mismatches}});
  }
  finish(r, {"mismatches"});
  return r;
}

ClaimReport lemma32(u64 qmax) {
  auto r = make("lemma-3.2", "Lemma 3.2");
  r.data["scope"] = "absolutely irreducible (a,b), q <= " + std::to_string(qmax) + "; monomial basis iff ab = 1";
  for (const Field& f : fields_up_to(qmax)) {
    u64 tested = 0, mismatches = 0;
    for_pairs(f, false, [&](Elem a, Elem b) {
      if (!dim3_irreducibility_conditions(f, a, b).overall()) return;
      ++tested;
      const bool monomial = dim3_monomial_basis(f, a, b).has_value();
      mismatches += monomial != (f.mul(a, b) == f.one());
    });
    r.data["fields"].push_back({{"field", f.to_string()}, {"tested", tested}, {"mismatches", mismatches}});
  }
  finish(r, {"mismatches"});
  return r;
}

ClaimReport lemma33(u64 qmax) {
  auto r = make("lemma-3.3", "Lemma 3.3");
  r.data["scope"] = "absolutely irreducible (a,b) with ab != 1, q <= " + std::to_string(qmax) + ", k = 1..7";
  for (const Field& f : fields_up_to(qmax)) {
    u64 tested = 0, mismatches = 0, small = 0, z5 = 0, z7 = 0, not_necessary = 0;
    for_pairs(f, false, [&](Elem a, Elem b) {
      if (f.mul(a, b) == f.one() || !dim3_irreducibility_conditions(f, a, b).overall()) return;
      ++tested;
      const auto s = scalar_power_classify_dim3(f, a, b);
      const Matrix z = build_dim3(f, a, b).z();
      Matrix zk = z;
      for (int k = 1; k <= 7; ++k, zk = zk * z) {
        const bool sc = zk.is_scalar();
        if ((k <= 4 || k == 6) && sc) ++small;
        if (k == 5) mismatches += sc != s.z5_scalar;
        if (k == 7) mismatches += sc != s.z7_scalar;
      }
      z5 += s.z5_scalar;
      z7 += s.z7_scalar;
      not_necessary += (s.z5_scalar && !s.z5_necessary) || (s.z7_scalar && !s.z7_necessary);
    });
    r.data["fields"].push_back({{"field", f.to_string()}, {"tested", tested}, {"z5_scalar", z5}, {"z7_scalar", z7},
                                {"scalar_below_5_or_at_6", small}, {"mismatches", mismatches},
                                {"outside_necessary_condition", not_necessary}});
  }
  finish(r, {"mismatches", "scalar_below_5_or_at_6", "outside_necessary_condition"});
  return r;
}

ClaimReport z5_resultant() {
  auto r = make("lemma-3.3-z5-resultant", "Lemma 3.3 (z^5 resultant)");
  const auto f1 = BivarPoly::parse("-a^2 + a*b^2 - b");
  const auto f2 = BivarPoly::parse("-2*a*b + b^3 + 1");
  const IntPoly got = resultant(f1, f2, "a");
  const IntPoly stated = parse_int_poly("b^8 - 4*b^5 - b^2", "b");
  const IntPoly sextic = parse_int_poly("b^6 - 4*b^3 - 1", "b");
  r.data["f1"] = f1.to_string();
  r.data["f2"] = f2.to_string();
  r.data["computed"] = to_string(got, "b");
  r.data["stated"] = "b^2 (b^6 - 4 b^3 - 1)";
  r.data["equals_stated"] = got == stated;
  r.data["equals_sextic"] = got == sextic;
  r.verdict = got == stated;
  return r;
}

ClaimReport z5_roots() {
  auto r = make("lemma-3.3-z5-roots", "Lemma 3.3 (z^5 roots)");
  const IntPoly got = resultant(BivarPoly::parse("-a^2 + a*b^2 - b"), BivarPoly::parse("-2*a*b + b^3 + 1"), "a");
  const IntPoly sextic = parse_int_poly("b^6 - 4*b^3 - 1", "b");
  // nonzero common roots b are exactly roots of the sextic
  const auto q = divide_exact(got, sextic);
  bool only_b = q.has_value();
  if (q)
    for (std::size_t i = 0; i + 1 < q->coeffs().size(); ++i) only_b = only_b && q->coeffs()[i] == 0;
  r.data["resultant"] = to_string(got, "b");
  r.data["cofactor"] = q ? json(to_string(*q, "b")) : json(nullptr);
  r.verdict = only_b;
  return r;
}

ClaimReport z7_resultant() {
  auto r = make("lemma-3.3-z7-resultant", "Lemma 3.3 (degree-15 resultant)");
  const auto g1 = BivarPoly::parse("a^3 - 3*a^2*b^2 + a*b^4 + 4*a*b - b^3 - 1");
  const auto g2 = BivarPoly::parse("3*a^2*b - 4*a*b^3 - 2*a + b^5 + 3*b^2");
  const IntPoly R = parse_int_poly(kR);
  const IntPoly rb = resultant(g1, g2, "b");
  const IntPoly ra = resultant(g1, g2, "a");
  r.data["R"] = to_string(R);
  r.data["res_b_equals_R"] = rb == R;
  r.data["res_a_equals_minus_R"] = ra == -R;
  r.verdict = rb == R && ra == -R;
  return r;
}

ClaimReport r_factors() {
  auto r = make("lemma-3.3-r-factors", "Lemma 3.3 (factorization of R)");
  const IntPoly R = parse_int_poly(kR);
  const std::vector<std::string> stated{"t^2 + t + 2", "t^3 - 2*t^2 - t + 1", "t^4 - t^3 - t^2 - 2*t + 4",
                                        "t^6 + 2*t^5 + 5*t^4 + 3*t^2 + t + 1"};
  const auto fac = factorize(R);
  bool ok = fac.unit == 1 && fac.factors.size() == stated.size();
  for (std::size_t i = 0; ok && i < stated.size(); ++i)
    ok = fac.factors[i].factor == parse_int_poly(stated[i]) && fac.factors[i].multiplicity == 1;
  for (const auto& t : fac.factors) r.data["factors"].push_back(to_string(t.factor));
  r.verdict = ok;
  return r;
}

ClaimReport sextic_factors() {
  auto r = make("lemma-3.3-sextic", "Lemma 3.3 (t^6 - 4t^3 - 1 over fields with omega)");
  const IntPoly s = parse_int_poly(kSextic);
  for (auto [p, m] : std::vector<std::pair<u64, int>>{{2, 2}, {7, 1}, {13, 1}, {19, 1}, {5, 2}, {2, 4}, {11, 2}, {31, 1}}) {
    const Field f = Field::make(p, m);
    const FieldRing R{f};
    const Elem w = f.elements_of_order(3).front(), w2 = f.mul(w, w);
    const FieldPoly q1(R, {f.from_int(-1), f.from_int(-1), f.one()});
    const FieldPoly q2(R, {f.neg(w2), f.neg(w), f.one()});
    const FieldPoly q3(R, {f.neg(w), f.neg(w2), f.one()});
    const FieldPoly target = reduce_mod(s, f);
    std::map<std::vector<Elem>, int> expected, got;
    for (const auto& q : {q1, q2, q3})
      for (const auto& t : factorize(q)) expected[t.factor.coeffs()] += t.multiplicity;
    json fs = json::array();
    for (const auto& t : factorize(target)) {
      got[t.factor.coeffs()] += t.multiplicity;
      fs.push_back(to_string(t.factor));
    }
    const bool ok = q1 * q2 * q3 == target && got == expected;
    r.verdict = r.verdict && ok;
    r.data["fields"].push_back({{"field", f.to_string()}, {"factors", fs}, {"matches", ok}});
  }
  return r;
}

ClaimReport splitting() {
  auto r = make("lemma-3.3-splitting", "Lemma 3.3 (roots of R and roots of unity)");
  const IntPoly R = parse_int_poly(kR);
  for (u64 p = 2; p <= 43; ++p) {
    if (!is_prime(p)) continue;
    auto s = splitting_order_check(R, p);
    r.verdict = r.verdict && s.verdict;
    s.data["p"] = p;
    s.data["verdict"] = s.verdict;
    r.data["primes"].push_back(s.data);
  }
  return r;
}

ClaimReport lemma34(u64 qmax) {
  auto r = make("lemma-3.4", "Lemma 3.4");
  r.data["scope"] = "absolutely irreducible (a,b), q <= " + std::to_string(qmax);
  for (const Field& f : fields_up_to(qmax)) {
    u64 tested = 0, herm_mismatch = 0, orth_mismatch = 0, a0_forms = 0;
    for_pairs(f, false, [&](Elem a, Elem b) {
      const auto g = build_dim3(f, a, b);
      if (!abs_irreducible(g)) return;
      ++tested;
      if (f.is_square_extension())
        herm_mismatch += has_nondegenerate_form(invariant_forms(g.gens(), Twist::Sigma, false)) != (b == f.sigma(a));
      if (f.p() != 2) orth_mismatch += has_nondegenerate_form(invariant_forms(g.gens(), Twist::Identity, false)) != (a == b);
      if (a == f.zero()) {
        bool any = has_nondegenerate_form(invariant_forms(g.gens(), Twist::Identity, true));
        if (f.is_square_extension()) any = any || has_nondegenerate_form(invariant_forms(g.gens(), Twist::Sigma, true));
        a0_forms += any;
      }
    });
    r.data["fields"].push_back({{"field", f.to_string()}, {"tested", tested}, {"hermitian_mismatches", herm_mismatch},
                                {"orthogonal_mismatches", orth_mismatch}, {"a0_with_form", a0_forms}});
  }
  finish(r, {"hermitian_mismatches", "orthogonal_mismatches", "a0_with_form"});
  return r;
}

ClaimReport lemma41(u64 qmax) {
  auto r = make("lemma-4.1", "Lemma 4.1");
  r.data["scope"] = "every (b,c) with c != 0, q <= " + std::to_string(qmax);
  for (const Field& f : fields_up_to(qmax)) {
    u64 pairs = 0, mismatches = 0;
    for_pairs(f, true, [&](Elem b, Elem c) {
      ++pairs;
      mismatches += dim5_irreducibility_conditions(f, b, c).overall() != abs_irreducible(build_dim5(f, b, c));
    });
    r.data["fields"].push_back({{"field", f.to_string()}, {"pairs", pairs}, {"mismatches", mismatches}});
  }
  finish(r, {"mismatches"});
  return r;
}

ClaimReport lemma43(u64 qmax) {
  auto r = make("lemma-4.3", "Lemma 4.3");
  r.data["scope"] = "absolutely irreducible (b,c), c != 0, q <= " + std::to_string(qmax);
  for (const Field& f : fields_up_to(qmax)) {
    if (f.p() == 2 && !f.is_square_extension()) continue;
    u64 tested = 0, herm_mismatch = 0, orth_mismatch = 0;
    for_pairs(f, true, [&](Elem b, Elem c) {
      const auto g = build_dim5(f, b, c);
      if (!abs_irreducible(g)) return;
      ++tested;
      if (f.is_square_extension()) {
        const Elem expect = f.sub(f.sub(f.sigma(c), c), f.one());
        herm_mismatch += has_nondegenerate_form(invariant_forms(g.gens(), Twist::Sigma, false)) != (b == expect);
      }
      if (f.p() != 2)
        orth_mismatch +=
            has_nondegenerate_form(invariant_forms(g.gens(), Twist::Identity, false)) != (b == f.neg(f.one()));
    });
    r.data["fields"].push_back({{"field", f.to_string()}, {"tested", tested}, {"hermitian_mismatches", herm_mismatch},
                                {"orthogonal_mismatches", orth_mismatch}});
  }
  finish(r, {"hermitian_mismatches", "orthogonal_mismatches"});
  return r;
}

ClaimReport lemma44(u64 qmax) {
  auto r = make("lemma-4.4", "Lemma 4.4");
  r.data["scope"] = "absolutely irreducible (b,c), q <= " + std::to_string(qmax);
  for (const Field& f : fields_up_to(qmax)) {
    u64 tested = 0, failures = 0, min_xy = 0, min_comm = 0;
    for_pairs(f, true, [&](Elem b, Elem c) {
      if (!dim5_irreducibility_conditions(f, b, c).overall()) return;
      ++tested;
      const auto s = scalar_power_bounds_dim5(f, b, c);
      failures += !s.verdict;
      const u64 xy = s.data["projective_order_xy"].get<u64>(), cm = s.data["projective_order_commutator"].get<u64>();
      if (min_xy == 0 || xy < min_xy) min_xy = xy;
      if (min_comm == 0 || cm < min_comm) min_comm = cm;
    });
    r.data["fields"].push_back({{"field", f.to_string()}, {"tested", tested}, {"failures", failures},
                                {"min_projective_order_xy", min_xy}, {"min_projective_order_commutator", min_comm}});
  }
  finish(r, {"failures"});
  return r;
}

ClaimReport cyclic_z(u64 q3, u64 q5) {
  auto r = make("lemma-3.4-cyclic", "Lemma 3.4 (z has a single invariant factor)");
  r.data["scope"] = "absolutely irreducible pairs, dimension 3 q <= " + std::to_string(q3) + ", dimension 5 q <= " +
                    std::to_string(q5);
  for (const Field& f : fields_up_to(std::max(q3, q5))) {
    u64 tested = 0, failures = 0;
    if (f.q() <= q3)
      for_pairs(f, false, [&](Elem a, Elem b) {
        const auto g = build_dim3(f, a, b);
        if (!abs_irreducible(g)) return;
        ++tested;
        failures += invariant_factors(g.z()).size() != 1;
      });
    if (f.q() <= q5)
      for_pairs(f, true, [&](Elem b, Elem c) {
        const auto g = build_dim5(f, b, c);
        if (!abs_irreducible(g)) return;
        ++tested;
        failures += invariant_factors(g.z()).size() != 1;
      });
    r.data["fields"].push_back({{"field", f.to_string()}, {"tested", tested}, {"failures", failures}});
  }
  finish(r, {"failures"});
  return r;
}

ClaimReport charpolys(u64 qmax) {
  auto r = make("charpoly-xy", "Characteristic polynomials of xy (dimensions 3 and 5)");
  r.data["scope"] = "every parameter pair, q <= " + std::to_string(qmax);
  for (const Field& f : fields_up_to(qmax)) {
    const FieldRing R{f};
    u64 failures = 0;
    for_pairs(f, false, [&](Elem a, Elem b) {
      // t^3 - b t^2 + a t - 1
      const FieldPoly c3(R, {f.from_int(-1), a, f.neg(b), f.one()});
      failures += !(charpoly(build_dim3(f, a, b).z()) == c3);
      if (a == f.zero()) return;
      const Elem c = a, bb = b;
      // t^5 + t^4 + c t^3 + (-b-c-1) t^2 - t - 1
      const FieldPoly c5(R, {f.from_int(-1), f.from_int(-1), f.sub(f.sub(f.neg(bb), c), f.one()), c, f.one(), f.one()});
      failures += !(charpoly(build_dim5(f, bb, c).z()) == c5);
    });
    r.data["fields"].push_back({{"field", f.to_string()}, {"failures", failures}});
  }
  finish(r, {"failures"});
  return r;
}

ClaimReport generation(const std::string& id, const std::string& label, Target t, u64 q, const RunConfig& cfg,
                       bool full, std::optional<u64> order_hint = std::nullopt, std::optional<u64> divisor = std::nullopt) {
  const TargetGroup group = target_for(t, q);
  if (full && group.expected_order > cfg.cap)
    throw CapExceeded(group.name() + " has order " + group.expected_order.str() + " > cap " + std::to_string(cfg.cap));
  const auto w = search_params(t, group.field(), order_hint);
  ClaimReport r = make(id, label);
  if (!w) {
    r.verdict = false;
    r.data["error"] = "search found no parameter";
    return r;
  }
  VerifyOptions o;
  o.cap = cfg.cap;
  o.witness_divisor = divisor;
  r = verify_generation(*w, t, group, o);
  r.id = id;
  r.label = label;
  return r;
}

ClaimReport search_none(const std::string& id, const std::string& label, Target t, const std::vector<u64>& qs) {
  auto r = make(id, label);
  for (u64 q : qs) {
    const Field f = target_for(t, q).field();
    const auto w = search_params(t, f);
    r.data["fields"].push_back({{"field", f.to_string()}, {"found", w.has_value()}});
    if (w) r.verdict = false;
  }
  return r;
}

ClaimReport psu3_claim(u64 q, bool all_pairs, bool canonical, const RunConfig& cfg) {
  const std::string id = "thm-3.6-psu3-" + std::to_string(q * q);
  auto r = make(id, "Theorem 3.6 (PSU3(" + std::to_string(q * q) + "))");
  ScanOptions o;
  o.cap = cfg.cap;
  o.threads = cfg.threads;
  const auto g = target_order(Family::SU, 3, q);
  if (all_pairs) {
    const auto c = nongeneration_scan(g, ScanMode::AllPairs, o);
    r.verdict = r.verdict && c.verdict;
    r.data["all_pairs"] = to_json(c);
  }
  if (canonical) {
    const auto c = nongeneration_scan(g, ScanMode::Canonical, o);
    r.verdict = r.verdict && c.verdict;
    r.data["canonical"] = to_json(c);
  }
  return r;
}

ClaimReport psl3_4(const RunConfig& cfg) {
  auto r = make("thm-3.5-psl3-4", "Theorem 3.5 (q = 4 excluded: PSL3(4))");
  ScanOptions o;
  o.cap = cfg.cap;
  o.threads = cfg.threads;
  const auto c = nongeneration_scan(target_order(Family::SL, 3, 4), ScanMode::AllPairs, o);
  r.data["all_pairs"] = to_json(c);
  const bool none = !search_params(Target::SL3, Field::make(2, 2));
  r.data["search_none"] = none;
  r.verdict = c.verdict && none;
  return r;
}

ClaimReport sl5_16(const RunConfig& cfg) {
  auto r = generation("thm-4.6-sl5-16", "Theorem 4.6 (q = 16)", Target::SL5, 16, cfg, false, 15, 41);
  const Field f = Field::make(2, 4);
  json others = json::array();
  for (u64 i = 1; i < f.q(); ++i) {
    const Elem c = f.from_index(i);
    if (theorem_conditions(Target::SL5, f, c).overall())
      others.push_back({{"c", f.format(c)}, {"minimal_polynomial", minimal_polynomial(f, c)}});
  }
  r.data["other_parameters_meeting_conditions"] = others;
  return r;
}

ClaimReport sl5_c_minus_2() {
  auto r = make("thm-4.6-c-minus-2", "Theorem 4.6 (c = -2 for q = 3, 5, 7)");
  for (u64 p : {3, 5, 7}) {
    const Field f = Field::make(p, 1);
    const Elem c = f.from_int(-2);
    const auto rep = theorem_conditions(Target::SL5, f, c);
    bool ok = rep.parts.size() >= 2 && rep.parts[0].holds && rep.parts[1].holds;
    const auto w = search_params(Target::SL5, f);
    r.data["fields"].push_back({{"field", f.to_string()}, {"conditions", to_json(rep)}, {"i_and_ii_hold", ok},
                                {"search_param", w ? json(f.format(w->param)) : json(nullptr)}});
    r.verdict = r.verdict && ok;
  }
  return r;
}

std::vector<Claim> build_registry() {
  using F = Feasibility;
  std::vector<Claim> c;
  auto add = [&](std::string id, std::string desc, std::vector<std::string> mods, F feas, bool slow,
                 std::function<ClaimReport(const RunConfig&)> fn) {
    c.push_back({std::move(id), std::move(desc), std::move(mods), feas, slow, std::move(fn)});
  };
  add("lemma-2.1", "phi(n) > n^(2/3) outside the listed exceptions, n <= 10^6", {"ff"}, F::ExhaustiveScan, false,
      [](const RunConfig&) { return check_phi_lemma(1, 1000000); });
  add("cor-2.2", "phi(n^2 - 1) bound for 14 <= n <= 10^5", {"ff"}, F::ExhaustiveScan, false,
      [](const RunConfig&) { return check_phi_corollary(14, 100000); });
  add("lemma-2.4", "F_p[a^s] = F_q for s = 3, 5 except q = 4, 16; q <= 4096", {"ff"}, F::ExhaustiveScan, false,
      [](const RunConfig&) { return check_subfield_lemma(4096); });
  add("charpoly-xy", "characteristic polynomial of xy in dimensions 3 and 5, q <= 7", {"matgrp", "paperlib"},
      F::ExhaustiveScan, false, [](const RunConfig&) { return charpolys(7); });
  add("lemma-3.1", "dimension-3 absolute irreducibility conditions, q <= 25", {"reptools", "paperlib"},
      F::ExhaustiveScan, false, [](const RunConfig&) { return lemma31(25); });
  add("lemma-3.2", "dimension-3 monomial basis iff ab = 1, q <= 25", {"paperlib"}, F::ExhaustiveScan, false,
      [](const RunConfig&) { return lemma32(25); });
  add("lemma-3.3", "scalar powers of xy in dimension 3, q <= 13", {"matgrp", "paperlib"}, F::ExhaustiveScan, false,
      [](const RunConfig&) { return lemma33(13); });
  add("lemma-3.3-z5-resultant", "Res_a(f1, f2) = b^2 (b^6 - 4b^3 - 1)", {"polyring"}, F::Exact, false,
      [](const RunConfig&) { return z5_resultant(); });
  add("lemma-3.3-z5-roots", "nonzero common roots b of the z^5 system are roots of t^6 - 4t^3 - 1", {"polyring"},
      F::Exact, false, [](const RunConfig&) { return z5_roots(); });
  add("lemma-3.3-z7-resultant", "the degree-15 resultant equals R", {"polyring"}, F::Exact, false,
      [](const RunConfig&) { return z7_resultant(); });
  add("lemma-3.3-r-factors", "R factors over Z into the four stated factors", {"polyring"}, F::Exact, false,
      [](const RunConfig&) { return r_factors(); });
  add("lemma-3.3-sextic", "t^6 - 4t^3 - 1 factors over fields containing omega", {"polyring"}, F::Exact, false,
      [](const RunConfig&) { return sextic_factors(); });
  add("lemma-3.3-splitting", "splitting fields of R and the orders 3, 7, 21", {"polyring"}, F::Exact, false,
      [](const RunConfig&) { return splitting(); });
  add("lemma-3.4", "invariant forms in dimension 3, q <= 49", {"reptools", "paperlib"}, F::ExhaustiveScan, false,
      [](const RunConfig&) { return lemma34(49); });
  add("lemma-3.4-cyclic", "xy has a single invariant factor on absolutely irreducible pairs", {"matgrp", "reptools"},
      F::ExhaustiveScan, false, [](const RunConfig&) { return cyclic_z(25, 7); });
  for (u64 q : {2, 3, 5, 7, 8, 9})
    add("thm-3.5-sl3-" + std::to_string(q), "SL3(" + std::to_string(q) + ") generated by the searched pair",
        {"paperlib", "engine"}, F::Exact, q == 9, [q](const RunConfig& cfg) {
          return generation("thm-3.5-sl3-" + std::to_string(q), "Theorem 3.5 (q = " + std::to_string(q) + ")",
                            Target::SL3, q, cfg, true);
        });
  add("thm-3.5-psl3-4", "PSL3(4) has no generating (2,3)-pair; search finds none", {"engine", "paperlib"},
      F::ExhaustiveScan, false, [](const RunConfig& cfg) { return psl3_4(cfg); });
  add("thm-3.6-psu3-4", "PSU3(4): all-pairs and canonical scans", {"engine", "paperlib"}, F::ExhaustiveScan, false,
      [](const RunConfig& cfg) { return psu3_claim(2, true, true, cfg); });
  add("thm-3.6-psu3-9", "PSU3(9): all-pairs and canonical scans", {"engine", "paperlib"}, F::ExhaustiveScan, false,
      [](const RunConfig& cfg) { return psu3_claim(3, true, true, cfg); });
  add("thm-3.6-psu3-25", "PSU3(25): canonical scan with outcome labels", {"engine", "paperlib"}, F::ExhaustiveScan,
      true, [](const RunConfig& cfg) { return psu3_claim(5, false, true, cfg); });
  add("thm-3.6-search-none", "no SU3 parameter for q^2 = 4, 9, 25", {"paperlib"}, F::ExhaustiveScan, false,
      [](const RunConfig&) { return search_none("thm-3.6-search-none", "Theorem 3.6", Target::SU3, {2, 3, 5}); });
  for (u64 q : {4, 7})
    add("thm-3.7-su3-" + std::to_string(q), "SU3(" + std::to_string(q * q) + ") generated by the searched pair",
        {"paperlib", "engine"}, F::Exact, false, [q](const RunConfig& cfg) {
          return generation("thm-3.7-su3-" + std::to_string(q), "Theorem 3.7 (q = " + std::to_string(q) + ")",
                            Target::SU3, q, cfg, true);
        });
  for (const auto& row : table_b())
    add("table-b-q" + std::to_string(row.q), "minimal polynomial table row q = " + std::to_string(row.q),
        {"polyring", "paperlib"}, F::Exact, false, [row](const RunConfig&) { return table_b_claim(row); });
  add("lemma-4.1", "dimension-5 absolute irreducibility conditions, q <= 7", {"reptools", "paperlib"},
      F::ExhaustiveScan, false, [](const RunConfig&) { return lemma41(7); });
  add("lemma-4.3", "invariant forms in dimension 5, q <= 25", {"reptools", "paperlib"}, F::ExhaustiveScan, false,
      [](const RunConfig&) { return lemma43(25); });
  add("lemma-4.4", "projective orders of xy and [x,y] in dimension 5, q <= 7", {"matgrp", "paperlib"},
      F::ExhaustiveScan, false, [](const RunConfig&) { return lemma44(7); });
  add("thm-4.6-sl5-2", "SL5(2) generated with (b,c) = (0,1)", {"paperlib", "engine"}, F::Exact, false,
      [](const RunConfig& cfg) { return generation("thm-4.6-sl5-2", "Theorem 4.6 (q = 2)", Target::SL5, 2, cfg, true); });
  add("thm-4.6-sl5-4", "SL5(4) with b = c = omega: irreducible, no forms, conditions", {"paperlib", "engine"},
      F::PartialCertificate, false,
      [](const RunConfig& cfg) { return generation("thm-4.6-sl5-4", "Theorem 4.6 (q = 4)", Target::SL5, 4, cfg, false); });
  add("thm-4.6-sl5-16", "SL5(16) witness with 41 dividing the order of xy", {"paperlib", "engine"},
      F::PartialCertificate, false, [](const RunConfig& cfg) { return sl5_16(cfg); });
  add("thm-4.6-c-minus-2", "c = -2 meets conditions (i) and (ii) for q = 3, 5, 7", {"paperlib"}, F::Exact, false,
      [](const RunConfig&) { return sl5_c_minus_2(); });
  add("thm-4.8-su5-16", "SU5(16) witness with 17 dividing the order of xy", {"paperlib", "engine"},
      F::PartialCertificate, false, [](const RunConfig& cfg) {
        return generation("thm-4.8-su5-16", "Theorem 4.8 (q = 4)", Target::SU5, 4, cfg, false, std::nullopt, 17);
      });
  for (u64 q : {3, 5})
    add("thm-4.8-su5-" + std::to_string(q * q) + "-witness", "SU5(" + std::to_string(q * q) + ") stated witness",
        {"paperlib"}, F::Exact, false, [q](const RunConfig&) { return su5_small_witness_claim(q); });
  add("thm-4.8-search-none", "no SU5 parameter for q^2 = 4", {"paperlib"}, F::ExhaustiveScan, false,
      [](const RunConfig&) { return search_none("thm-4.8-search-none", "Theorem 4.8", Target::SU5, {2}); });
  return c;
}

}  // namespace

std::string to_string(Feasibility f) {
  switch (f) {
    case Feasibility::Exact: return "exact";
    case Feasibility::ExhaustiveScan: return "exhaustive-scan";
    case Feasibility::PartialCertificate: return "partial-certificate";
  }
  return "?";
}

const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> reg = [] {
    auto r = build_registry();
    std::map<std::string, int> seen;
    for (const auto& c : r)
      if (seen[c.id]++) throw std::logic_error("duplicate claim id " + c.id);
    return r;
  }();
  return reg;
}

const Claim* find_claim(const std::string& id) {
  for (const auto& c : claim_registry())
    if (c.id == id) return &c;
  return nullptr;
}

ClaimReport run_claim(const Claim& claim, const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  ClaimReport r;
  try {
    r = claim.run(cfg);
  } catch (const CapExceeded& e) {
    r = ClaimReport{claim.id, claim.id, false, {{"cap_exceeded", true}, {"error", e.what()}}, 0};
  }
  r.id = claim.id;
  if (r.data.contains("closure") && r.data["closure"].value("truncated", false)) {
    r.verdict = false;
    r.data["cap_exceeded"] = true;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

bool RunReport::all_pass() const {
  for (const auto& r : results)
    if (!r.verdict) return false;
  return true;
}

bool RunReport::any_cap_exceeded() const {
  for (const auto& r : results)
    if (r.data.value("cap_exceeded", false)) return true;
  return false;
}

nlohmann::json to_json(const RunReport& r, bool with_timing) {
  json env{{"seed", r.config.seed}, {"cap", r.config.cap}, {"threads", r.config.threads}, {"slow", r.config.slow}};
  json claims = json::array();
  for (const auto& c : r.results) claims.push_back(to_json(c, with_timing));
  return {{"environment", env}, {"claims", claims}, {"all_pass", r.all_pass()}};
}

std::string to_markdown(const RunReport& r, bool with_timing) {
  std::ostringstream out;
  out << "# Claim report\n\n";
  out << "seed " << r.config.seed << ", cap " << r.config.cap << ", threads " << r.config.threads
      << (r.config.slow ? ", slow claims included" : "") << "\n\n";
  out << "| id | label | verdict |" << (with_timing ? " seconds |" : "") << "\n";
  out << "|---|---|---|" << (with_timing ? "---|" : "") << "\n";
  for (const auto& c : r.results) {
    out << "| " << c.id << " | " << c.label << " | " << (c.verdict ? "PASS" : "FAIL") << " |";
    if (with_timing) {
      std::ostringstream s;
      s.precision(3);
      s << std::fixed << c.seconds;
      out << " " << s.str() << " |";
    }
    out << "\n";
  }
  out << "\n" << (r.all_pass() ? "All claims verified." : "Some claims failed; see the JSON report.") << "\n";
  return out.str();
}

}  // namespace gen23
