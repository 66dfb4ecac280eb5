#include "matcount/pigeonhole.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "matcount/exactcount.hpp"

namespace matcount {

namespace {

// Largest q with q*q < n, i.e. q < sqrt(n) strictly.
u64 strict_sqrt_bound(u64 n) {
    u64 s = floor_sqrt(n);
    return (s > 0 && s * s == n) ? s - 1 : s;
}

}  // namespace

bool is_prime_or_prime_square(u64 n) {
    if (is_prime(n)) return true;
    u64 s = floor_sqrt(n);
    return s * s == n && is_prime(s);
}

SmallFraction small_ratio_rep(u64 c, u64 n) {
    if (!is_prime_or_prime_square(n))
        throw std::invalid_argument("small_ratio_rep: n must be p or p^2");
    if (c >= n)
        throw std::invalid_argument("small_ratio_rep: residue out of range");
    const u64 s = floor_sqrt(n);
    const u64 qmax = strict_sqrt_bound(n);
    for (u64 q = 1; q <= qmax; ++q) {
        // q < sqrt(n) <= p, so gcd(q, n) = 1 automatically
        u64 a0 = u64((u128)c * q % n);
        i64 best = 0;
        bool found = false;
        for (i64 a : {i64(a0), i64(a0) - i64(n)}) {
            u64 aa = u64(a < 0 ? -a : a);
            if (aa > s) continue;  // |a| <= sqrt(n) <=> |a| <= floor_sqrt(n)
            u64 ba = u64(best < 0 ? -best : best);
            if (!found || aa < ba || (aa == ba && a > best)) {
                best = a;
                found = true;
            }
        }
        if (found) return {best, q, c, n};
    }
    throw std::logic_error("small_ratio_rep: no witness found");
}

OmegaSet omega_set(u64 n) {
    if (n < 2) throw std::invalid_argument("omega_set: n must be >= 2");
    OmegaSet omega;
    omega.n = n;
    const i64 s = i64(floor_sqrt(n));
    const u64 qmax = strict_sqrt_bound(n);
    for (u64 q = 1; q <= qmax; ++q) {
        for (i64 a = -s; a <= s; ++a) {
            if (gcd(a, i64(q)) == 1) omega.points.emplace_back(a, q);
        }
    }
    return omega;
}

u64 t_map(i64 a, u64 q, u64 n) {
    auto inv = mod_inverse(i64(q), n);
    if (!inv) throw std::invalid_argument("t_map: q not invertible mod n");
    i64 am = a % i64(n);
    if (am < 0) am += i64(n);
    return u64((u128)u64(am) * *inv % n);
}

namespace {

u64 collisions_in(const std::vector<std::pair<i64, u64>>& pts, u64 n) {
    u64 cnt = 0;
    for (auto [a, q] : pts)
        for (auto [b, r] : pts)
            if (a * i64(r) - b * i64(q) == i64(n)) ++cnt;
    return cnt;
}

}  // namespace

u64 collision_count(u64 n) {
    OmegaSet omega = omega_set(n);
    // Collisions under T imply equal T-image when q is invertible; bucket
    // by image and scan within buckets (fibers have size 1 or 2 for p, p^2).
    std::vector<std::pair<u64, size_t>> keyed;
    keyed.reserve(omega.points.size());
    for (size_t i = 0; i < omega.points.size(); ++i) {
        auto [a, q] = omega.points[i];
        if (gcd(i64(q), i64(n)) != 1) return collisions_in(omega.points, n);
        keyed.emplace_back(t_map(a, q, n), i);
    }
    std::sort(keyed.begin(), keyed.end());
    u64 cnt = 0;
    for (size_t lo = 0; lo < keyed.size();) {
        size_t hi = lo;
        while (hi < keyed.size() && keyed[hi].first == keyed[lo].first) ++hi;
        for (size_t i = lo; i < hi; ++i) {
            auto [a, q] = omega.points[keyed[i].second];
            for (size_t j = lo; j < hi; ++j) {
                auto [b, r] = omega.points[keyed[j].second];
                if (a * i64(r) - b * i64(q) == i64(n)) ++cnt;
            }
        }
        lo = hi;
    }
    return cnt;
}

u64 collision_count_direct(u64 n) {
    return collisions_in(omega_set(n).points, n);
}

Thm2Assembly thm2_assemble(u64 n) {
    if (!is_prime_or_prime_square(n))
        throw std::invalid_argument("thm2_assemble: n must be p or p^2");
    Thm2Assembly out;
    out.n = n;
    out.exact = count_lattice(i64(n), i64(floor_sqrt(n)));
    out.omega_size = omega_set(n).points.size();
    out.intermediate = 4 * (i64(out.omega_size) - i64(n));
    constexpr double pi = std::numbers::pi;
    out.predicted = 4.0 * (12.0 / (pi * pi) - 1.0) * double(n);
    return out;
}

}  // namespace matcount
