#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "gen23/ff.hpp"

namespace gen23 {

namespace {

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::set<u64> kPhiExceptions{1, 2, 3, 4, 6, 8, 10, 12, 18, 24, 30, 42};

}  // namespace

u64 phi_n2_minus_1(u64 n) {
  std::map<u64, int> acc;
  for (auto [p, e] : factorize_trial(n - 1)) acc[p] += e;
  for (auto [p, e] : factorize_trial(n + 1)) acc[p] += e;
  return euler_phi(Factorization(acc.begin(), acc.end()));
}

ClaimReport check_phi_lemma(u64 lo, u64 hi) {
  const auto t0 = std::chrono::steady_clock::now();
  ClaimReport r{"lemma-2.1", "Lemma 2.1", false, {}, 0};
  std::vector<u64> exceptions, equalities;
  for (u64 n = std::max<u64>(lo, 1); n <= hi; ++n) {
    const u64 phi = euler_phi(n);
    if (!phi_exceeds_two_thirds(n, phi)) exceptions.push_back(n);
    if (static_cast<u128>(phi) * phi * phi == static_cast<u128>(n) * n) equalities.push_back(n);
  }
  std::vector<u64> expected;
  for (u64 e : kPhiExceptions)
    if (e >= lo && e <= hi) expected.push_back(e);
  std::vector<u64> expected_eq;
  for (u64 e : {1ULL, 8ULL})
    if (e >= lo && e <= hi) expected_eq.push_back(e);
  r.verdict = exceptions == expected && equalities == expected_eq;
  r.data = {{"range", {lo, hi}}, {"exceptions", exceptions}, {"equalities", equalities}};
  r.seconds = since(t0);
  return r;
}

ClaimReport check_phi_corollary(u64 lo, u64 hi) {
  const auto t0 = std::chrono::steady_clock::now();
  ClaimReport r{"cor-2.2", "Corollary 2.2", true, {}, 0};
  std::vector<u64> failures;
  u64 checked = 0;
  for (u64 n = std::max<u64>(lo, 14); n <= hi; ++n) {
    const u64 phi = phi_n2_minus_1(n);
    ++checked;
    if (!(phi > std::max(3 * n + 21, 4 * n - 1))) failures.push_back(n);
  }
  r.verdict = failures.empty();
  r.data = {{"range", {std::max<u64>(lo, 14), hi}}, {"checked", checked}, {"failures", failures}};
  r.seconds = since(t0);
  return r;
}

ClaimReport check_phi_bounds(u64 lo, u64 hi) {
  const auto t0 = std::chrono::steady_clock::now();
  auto a = check_phi_lemma(lo, hi);
  auto b = check_phi_corollary(lo, hi);
  ClaimReport r{"phi-bounds", "Lemma 2.1 / Corollary 2.2", a.verdict && b.verdict, {}, 0};
  r.data = {{"lemma", a.data}, {"corollary", b.data}};
  r.seconds = since(t0);
  return r;
}

ClaimReport check_subfield_lemma(u64 max_q) {
  const auto t0 = std::chrono::steady_clock::now();
  ClaimReport r{"lemma-2.4", "Lemma 2.4", false, {}, 0};
  std::vector<std::pair<u64, u64>> s35_failures;  // (q, s)
  std::vector<nlohmann::json> unexplained;
  u64 fields = 0, elements = 0;
  const std::vector<u64> primes_s{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  for (u64 q = 2; q <= max_q; ++q) {
    u64 p = 0;
    int m = 0;
    if (!prime_power(q, p, m)) continue;
    const Field f = Field::make(p, m);
    ++fields;
    std::set<std::pair<u64, u64>> seen;
    for (Elem a : f.elements_of_order(q - 1)) {
      ++elements;
      for (u64 s : primes_s) {
        const auto sub = f.subfield_generated(f.pow(a, static_cast<long long>(s)));
        if (sub.size == q) continue;
        if ((s == 3 || s == 5) && seen.insert({q, s}).second) s35_failures.emplace_back(q, s);
        // Allowed only when s = 1 + q0 + ... + q0^(t-1), q = q0^t, t >= 2.
        bool explained = false;
        for (int d = 1; d < m; ++d) {
          if (m % d) continue;
          u64 q0 = 1;
          for (int i = 0; i < d; ++i) q0 *= p;
          u64 sum = 0, pw = 1;
          for (int j = 0; j < m / d; ++j) {
            sum += pw;
            pw *= q0;
          }
          if (sum == s) explained = true;
        }
        if (!explained && unexplained.size() < 16) unexplained.push_back({{"q", q}, {"s", s}});
      }
    }
  }
  const std::vector<std::pair<u64, u64>> expected{{4, 3}, {16, 5}};
  std::vector<std::pair<u64, u64>> expected_in_range;
  for (auto e : expected)
    if (e.first <= max_q) expected_in_range.push_back(e);
  r.verdict = s35_failures == expected_in_range && unexplained.empty();
  nlohmann::json fails = nlohmann::json::array();
  for (auto [q, s] : s35_failures) fails.push_back({{"q", q}, {"s", s}});
  r.data = {{"max_q", max_q}, {"fields", fields}, {"primitive_elements", elements},
            {"exceptions_s3_s5", fails}, {"unexplained", unexplained}};
  r.seconds = since(t0);
  return r;
}

}  // namespace gen23
