#pragma once

#include <cstdint>
#include <string>

#include "matcount/arith.hpp"

// Exact evaluation of S(n, X), the number of 2x2 integer matrices
// [[a, b], [q, r]] with det = ar - bq = n and all entries bounded by X in
// absolute value, via three independent routes:
//
//   count_oracle  - direct enumeration, O(X^3), small X only
//   count_lattice - per-(a, q) line counting, O(X^2 log X)
//   count_divisor - the divisor-sum decomposition
//                   S = 2*S_leq - S_eq,  S_leq = sum over d|n of S_d
//
// plus the sub-quantities S_leq, S_eq, S_d themselves.  All arithmetic is
// exact; floating point never enters a counter.

namespace matcount {

enum class CountMethod { oracle, lattice, divisor };

const char* method_name(CountMethod m);
CountMethod method_from_name(const std::string& name);

struct CountQuery {
    i64 n = 1;           // determinant, nonzero
    i64 x = 1;           // entry bound, 1 <= x <= kMaxX
    CountMethod method = CountMethod::lattice;
};

struct CountResult {
    CountQuery query;
    u64 count = 0;
    double elapsed_seconds = 0.0;
};

// Safe range: all intermediates fit i64 with margin (|ar - bq| <= 2 X^2).
constexpr i64 kMaxX = i64{1} << 20;
// Cubic-cost guard for the oracle, overridable.
constexpr i64 kOracleMaxX = 512;

// Number of integer pairs (u, v) with A*u + B*v == N, umin <= u <= umax,
// vmin <= v <= vmax.  Exact interval intersection, no floating point.
u64 count_on_line(i64 A, i64 B, i64 N, i64 umin, i64 umax, i64 vmin, i64 vmax);

u64 count_oracle(i64 n, i64 x, bool allow_large = false);
u64 count_lattice(i64 n, i64 x);

// |r| <= |q| variant (and the |r| == |q| boundary slice).
u64 count_sleq(i64 n, i64 x);
u64 count_seq(i64 n, i64 x);

// The part of S_leq whose q has gcd(q, n) == d; requires d | n, n >= 1.
// Enumerates e | d and the scaled residue classes r = n/d * a^{-1} mod q/d.
u64 count_sd(u64 n, i64 x, u64 d);

// 2*S_leq - S_eq with S_leq assembled from the S_d pieces.
// Negative n reduced to |n| by sign symmetry.
u64 count_divisor(i64 n, i64 x);

CountResult run_query(const CountQuery& q, bool allow_large_oracle = false);

}  // namespace matcount
