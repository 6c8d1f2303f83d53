#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace gen23 {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Prime-power factorization, primes ascending.
using Factorization = std::vector<std::pair<u64, int>>;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
u64 powmod(u64 base, u64 exp, u64 m);
u64 gcd_u64(u64 a, u64 b);
u64 lcm_u64(u64 a, u64 b);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(u64 n);

/// Factorization by trial division only. Intended for n up to ~10^12.
Factorization factorize_trial(u64 n);

/// Factorization by trial division of small primes, then Pollard-Brent.
Factorization factorize(u64 n);

/// Returns (p, m) if q = p^m with p prime, m >= 1.
bool prime_power(u64 q, u64& p, int& m);

std::vector<u64> divisors(const Factorization& f);

/// Euler's totient via trial-division factorization. Throws on n == 0.
u64 euler_phi(u64 n);
u64 euler_phi(const Factorization& f);

/// Exact test of phi(n) > n^(2/3), evaluated as phi(n)^3 > n^2.
bool phi_exceeds_two_thirds(u64 n, u64 phi);

}  // namespace gen23
