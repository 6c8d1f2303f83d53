#pragma once

// Finite fields plus the elementary number-theoretic checks that feed the
// generation theorems.

#include <cstdint>

#include "gen23/field.hpp"
#include "gen23/numtheory.hpp"
#include "gen23/report.hpp"

namespace gen23 {

/// Integers n in [lo, hi] with phi(n) <= n^(2/3); expected {1,2,3,4,6,8,10,12,18,24,30,42}.
ClaimReport check_phi_lemma(u64 lo, u64 hi);

/// phi(n^2 - 1) > max(3n + 21, 4n - 1) for every n in [max(lo, 14), hi].
ClaimReport check_phi_corollary(u64 lo, u64 hi);

/// Both of the above over one interval.
ClaimReport check_phi_bounds(u64 lo, u64 hi);

/// phi(n^2 - 1) from the factorizations of n - 1 and n + 1.
u64 phi_n2_minus_1(u64 n);

/// For every prime power q <= max_q and every a of order q - 1, checks
/// GF(p)[a^s] = GF(q) for s = 3, 5 with the exceptions q = 4 (s = 3) and
/// q = 16 (s = 5), and that every failure for a prime s <= 31 has
/// s = 1 + q0 + ... + q0^(t-1) with q = q0^t.
ClaimReport check_subfield_lemma(u64 max_q);

}  // namespace gen23
