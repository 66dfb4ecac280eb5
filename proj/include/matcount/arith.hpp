#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

// Exact integer arithmetic and the classical arithmetic functions
// (divisors, sigma, phi, Mobius, omega) over 64-bit inputs.

namespace matcount {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

/// Prime factorization of a positive integer, primes strictly increasing.
struct Factorization {
    u64 value = 1;
    std::vector<std::pair<u64, unsigned>> factors;  // (prime, exponent)
};

/// Non-negative rational stored in lowest terms.
struct ExactRational {
    u64 num = 0;
    u64 den = 1;
};

struct ExtGcdResult {
    i64 g;  // gcd(a, b), non-negative
    i64 x;
    i64 y;  // a*x + b*y == g
};

// gcd(|a|, |b|); gcd(0, 0) == 0 by convention.
i64 gcd(i64 a, i64 b);

// Bezout coefficients with a*x + b*y == g.  When both a and b are nonzero
// the x coefficient is minimized: |x| <= max(1, |b|/(2g)).  Rejects (0, 0).
ExtGcdResult ext_gcd(i64 a, i64 b);

// Inverse of a modulo m in [0, m), or nullopt when gcd(a, m) != 1.
// mod_inverse(a, 1) == 0 for every a.
std::optional<u64> mod_inverse(i64 a, u64 m);

// Deterministic for all n < 2^64.
bool is_prime(u64 n);

std::vector<u64> primes_up_to(u64 limit);

// Trial division below 1e6 then Pollard rho; deterministic. Rejects n == 0.
Factorization factorize(u64 n);

std::vector<u64> divisors(const Factorization& f);

u64 sigma0(const Factorization& f);

// sigma_{-1}(n) = sigma_1(n)/n as an exact reduced rational.
ExactRational sigma_minus1(const Factorization& f);

u64 euler_phi(const Factorization& f);
int mobius(const Factorization& f);
unsigned omega(const Factorization& f);

// Largest s with s*s <= n, exact over the full 64-bit range.
u64 floor_sqrt(u64 n);

}  // namespace matcount
