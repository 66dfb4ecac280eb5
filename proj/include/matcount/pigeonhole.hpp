#pragma once

#include <cstdint>
#include <vector>

#include "matcount/arith.hpp"

// The small-fraction representation of residues mod p and p^2, the coprime
// point set Omega = {(a, q) : |a| <= sqrt(n), 0 < q < sqrt(n), gcd(a,q)=1},
// the map T(a, q) = a*q^{-1} mod n, and the exact collision identity
//   n = |Omega| - #{ordered pairs ((a,q),(b,r)) in Omega^2 : ar - bq = n}.

namespace matcount {

/// Witness (a, q) with a = c*q mod n, |a| <= sqrt(n), 0 < q < sqrt(n),
/// gcd(q, n) = 1.
struct SmallFraction {
    i64 a = 0;
    u64 q = 1;
    u64 c = 0;  // target residue
    u64 n = 1;  // modulus, p or p^2
};

struct OmegaSet {
    u64 n = 0;
    std::vector<std::pair<i64, u64>> points;  // (a, q), sorted by (q, a)
};

// True when n = p or n = p^2 for a prime p.
bool is_prime_or_prime_square(u64 n);

// Deterministic: smallest q, then smallest |a|, then a > 0.
// Requires n = p or p^2 and 0 <= c < n; existence is guaranteed.
SmallFraction small_ratio_rep(u64 c, u64 n);

OmegaSet omega_set(u64 n);  // n >= 2

// T(a, q) = a * q^{-1} mod n; requires gcd(q, n) = 1.
u64 t_map(i64 a, u64 q, u64 n);

// Ordered pairs of Omega points with ar - bq = n, grouped by T-image when
// every q is invertible mod n, with a direct quadratic scan otherwise.
u64 collision_count(u64 n);

// Quadratic reference scan over Omega x Omega.
u64 collision_count_direct(u64 n);

struct Thm2Assembly {
    u64 n = 0;
    u64 exact = 0;        // count_lattice(n, floor_sqrt(n))
    u64 omega_size = 0;
    i64 intermediate = 0; // 4*(|Omega| - n)
    double predicted = 0; // 4*(12/pi^2 - 1)*n
};

Thm2Assembly thm2_assemble(u64 n);  // n = p or p^2 only

}  // namespace matcount
