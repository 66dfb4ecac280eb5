#include "matcount/exactcount.hpp"

#include <chrono>
#include <cstdlib>

namespace matcount {

const char* method_name(CountMethod m) {
    switch (m) {
        case CountMethod::oracle: return "oracle";
        case CountMethod::lattice: return "lattice";
        case CountMethod::divisor: return "divisor";
    }
    return "?";
}

CountMethod method_from_name(const std::string& name) {
    if (name == "oracle") return CountMethod::oracle;
    if (name == "lattice") return CountMethod::lattice;
    if (name == "divisor") return CountMethod::divisor;
    throw std::invalid_argument("unknown count method: " + name);
}

namespace {

void check_args(i64 n, i64 x, i64 xmax) {
    if (n == 0) throw std::invalid_argument("count: n = 0 is out of scope");
    if (x < 1) throw std::invalid_argument("count: X must be >= 1");
    if (x > xmax)
        throw std::invalid_argument("count: X exceeds safe bound " +
                                    std::to_string(xmax));
}

i128 floor_div(i128 a, i128 b) {
    i128 q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

i128 ceil_div(i128 a, i128 b) {
    i128 q = a / b, r = a % b;
    if (r != 0 && ((r < 0) == (b < 0))) ++q;
    return q;
}

// Integers t with lo <= u0 + t*s <= hi, s != 0.
u64 steps_in_range(i128 u0, i128 s, i128 lo, i128 hi, i128* tlo_out,
                   i128* thi_out) {
    i128 tlo, thi;
    if (s > 0) {
        tlo = ceil_div(lo - u0, s);
        thi = floor_div(hi - u0, s);
    } else {
        tlo = ceil_div(hi - u0, s);
        thi = floor_div(lo - u0, s);
    }
    if (tlo_out) *tlo_out = tlo;
    if (thi_out) *thi_out = thi;
    return thi >= tlo ? u64(thi - tlo + 1) : 0;
}

// Pairs (a, r) with a*r == n inside the box, i.e. divisor pairs with signs.
u64 product_pairs_in_box(i64 n, i64 x) {
    u64 nn = n < 0 ? u64(-(u128)n) : u64(n);
    u64 cnt = 0;
    for (u64 a = 1; a <= u64(x); ++a) {
        if (nn % a == 0 && nn / a <= u64(x)) cnt += 2;  // (+,+)/(-,-) or mixed
    }
    return cnt;
}

}  // namespace

u64 count_on_line(i64 A, i64 B, i64 N, i64 umin, i64 umax, i64 vmin,
                  i64 vmax) {
    if (umin > umax || vmin > vmax) return 0;
    if (A == 0 && B == 0) {
        if (N != 0) return 0;
        return u64(umax - umin + 1) * u64(vmax - vmin + 1);
    }
    if (A == 0) {
        if (N % B != 0) return 0;
        i64 v = N / B;
        return (v >= vmin && v <= vmax) ? u64(umax - umin + 1) : 0;
    }
    if (B == 0) {
        if (N % A != 0) return 0;
        i64 u = N / A;
        return (u >= umin && u <= umax) ? u64(vmax - vmin + 1) : 0;
    }
    auto e = ext_gcd(A, B);
    if (N % e.g != 0) return 0;
    i128 k = N / e.g;
    i128 u0 = (i128)e.x * k;
    i128 v0 = (i128)e.y * k;
    // u = u0 + t*(B/g), v = v0 - t*(A/g)
    i128 su = B / e.g, sv = -(i128)(A / e.g);
    i128 ulo, uhi, vlo, vhi;
    steps_in_range(u0, su, umin, umax, &ulo, &uhi);
    steps_in_range(v0, sv, vmin, vmax, &vlo, &vhi);
    i128 lo = ulo > vlo ? ulo : vlo;
    i128 hi = uhi < vhi ? uhi : vhi;
    return hi >= lo ? u64(hi - lo + 1) : 0;
}

u64 count_oracle(i64 n, i64 x, bool allow_large) {
    check_args(n, x, allow_large ? kMaxX : kOracleMaxX);
    // q = 0 slab: ar = n with b free over 2X+1 values.
    u64 total = product_pairs_in_box(n, x) * u64(2 * x + 1);
    for (i64 a = -x; a <= x; ++a) {
        for (i64 q = -x; q <= x; ++q) {
            if (q == 0) continue;
            for (i64 r = -x; r <= x; ++r) {
                i64 t = a * r - n;
                if (t % q == 0) {
                    i64 b = t / q;
                    if (b >= -x && b <= x) ++total;
                }
            }
        }
    }
    return total;
}

u64 count_lattice(i64 n, i64 x) {
    check_args(n, x, kMaxX);
    u64 total = product_pairs_in_box(n, x) * u64(2 * x + 1);
    // Solutions of a*r - q*b = n per (a, q) cell; the count is invariant
    // under a -> -a (r -> -r) and q -> -q (b -> -b), so fold to a,q >= 0.
    for (i64 a = 0; a <= x; ++a) {
        u64 w = a == 0 ? 2 : 4;
        for (i64 q = 1; q <= x; ++q) {
            total += w * count_on_line(a, -q, n, -x, x, -x, x);
        }
    }
    return total;
}

u64 count_sleq(i64 n, i64 x) {
    check_args(n, x, kMaxX);
    // q = 0 forces r = 0 and contributes nothing for n != 0.
    u64 total = 0;
    for (i64 a = 0; a <= x; ++a) {
        u64 w = a == 0 ? 2 : 4;
        for (i64 q = 1; q <= x; ++q) {
            total += w * count_on_line(a, -q, n, -q, q, -x, x);
        }
    }
    return total;
}

u64 count_seq(i64 n, i64 x) {
    check_args(n, x, kMaxX);
    u64 total = 0;
    for (i64 q = -x; q <= x; ++q) {
        if (q == 0) continue;  // r = 0 as well, no solutions for n != 0
        for (i64 r : {q, -q}) {
            total += count_on_line(r, -q, n, -x, x, -x, x);
        }
    }
    return total;
}

u64 count_sd(u64 n, i64 x, u64 d) {
    check_args(i64(n), x, kMaxX);
    if (d == 0 || n % d != 0)
        throw std::invalid_argument("count_sd: d must divide n");
    const i64 n_d = i64(n / d);
    const auto divs_d = divisors(factorize(d));
    u64 total = 0;
    for (i64 q = -x; q <= x; ++q) {
        if (q == 0 || u64(gcd(q, i64(n))) != d) continue;
        const i64 q_d = q / i64(d);
        const u64 m = u64(q_d < 0 ? -q_d : q_d);
        for (u64 e : divs_d) {
            const i64 amax = x / i64(e);
            const i64 q_e = q / i64(e);
            const i64 rmax = i64(e) * i64(m);  // |r/(d/e)| <= |q|*e/d
            for (i64 a_e = -amax; a_e <= amax; ++a_e) {
                if (gcd(a_e, q_e) != 1) continue;  // ensures gcd(a, q) == e
                auto inv = mod_inverse(a_e, m);
                if (!inv) continue;  // unreachable: q_d | q_e
                i64 r0 = i64((u128)u64(n_d % i64(m)) * *inv % m);
                // scan the residue class r0 mod m within [-rmax, rmax]
                i64 first = -rmax + (r0 + rmax) % i64(m);
                for (i64 r_rel = first; r_rel <= rmax; r_rel += i64(m)) {
                    i64 num = a_e * r_rel - n_d;  // divisible by q_d
                    i64 b = num / q_d;
                    if (b >= -x && b <= x) ++total;
                }
            }
        }
    }
    return total;
}

u64 count_divisor(i64 n, i64 x) {
    check_args(n, x, kMaxX);
    u64 nn = n < 0 ? u64(-n) : u64(n);  // S(n,X) = S(-n,X)
    u64 sleq = 0;
    for (u64 d : divisors(factorize(nn))) sleq += count_sd(nn, x, d);
    return 2 * sleq - count_seq(i64(nn), x);
}

CountResult run_query(const CountQuery& q, bool allow_large_oracle) {
    CountResult res;
    res.query = q;
    auto t0 = std::chrono::steady_clock::now();
    switch (q.method) {
        case CountMethod::oracle:
            res.count = count_oracle(q.n, q.x, allow_large_oracle);
            break;
        case CountMethod::lattice:
            res.count = count_lattice(q.n, q.x);
            break;
        case CountMethod::divisor:
            res.count = count_divisor(q.n, q.x);
            break;
    }
    auto t1 = std::chrono::steady_clock::now();
    res.elapsed_seconds = std::chrono::duration<double>(t1 - t0).count();
    return res;
}

}  // namespace matcount
