#include "gen23/numtheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace gen23 {

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

u64 lcm_u64(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize_trial(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize_trial: n = 0");
  Factorization out;
  auto take = [&](u64 p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  };
  take(2);
  take(3);
  for (u64 p = 5; p <= n / p; p += 6) {
    take(p);
    take(p + 2);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

namespace {

u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    const u64 m = 128;
    u64 r = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(u64 n, std::map<u64, int>& acc) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++acc[n];
    return;
  }
  u64 d = pollard_brent(n);
  split(d, acc);
  split(n / d, acc);
}

}  // namespace

Factorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n = 0");
  std::map<u64, int> acc;
  for (u64 p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      n /= p;
      ++acc[p];
    }
  }
  split(n, acc);
  return {acc.begin(), acc.end()};
}

bool prime_power(u64 q, u64& p, int& m) {
  if (q < 2) return false;
  auto f = factorize(q);
  if (f.size() != 1) return false;
  p = f[0].first;
  m = f[0].second;
  return true;
}

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> out{1};
  for (auto [p, e] : f) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 euler_phi(const Factorization& f) {
  u64 r = 1;
  for (auto [p, e] : f) {
    r *= p - 1;
    for (int k = 1; k < e; ++k) r *= p;
  }
  return r;
}

u64 euler_phi(u64 n) {
  if (n == 0) throw std::invalid_argument("euler_phi: n = 0");
  return euler_phi(factorize_trial(n));
}

bool phi_exceeds_two_thirds(u64 n, u64 phi) {
  const u128 lhs = static_cast<u128>(phi) * phi * phi;
  const u128 rhs = static_cast<u128>(n) * n;
  return lhs > rhs;
}

}  // namespace gen23
