#include "matcount/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace matcount {

i64 gcd(i64 a, i64 b) {
    u64 x = a < 0 ? u64(-(u128)a) : u64(a);
    u64 y = b < 0 ? u64(-(u128)b) : u64(b);
    return static_cast<i64>(std::gcd(x, y));
}

ExtGcdResult ext_gcd(i64 a, i64 b) {
    if (a == 0 && b == 0)
        throw std::invalid_argument("ext_gcd: both arguments zero");
    if (b == 0) return {a < 0 ? -a : a, a < 0 ? -1 : 1, 0};
    if (a == 0) return {b < 0 ? -b : b, 0, b < 0 ? -1 : 1};

    // Iterative Euclid on |a|, |b|; the resulting coefficients satisfy
    // |x| <= |b|/(2g) and |y| <= |a|/(2g) except in the trivial cases.
    i64 old_r = a < 0 ? -a : a, r = b < 0 ? -b : b;
    i64 old_x = 1, x = 0;
    i64 old_y = 0, y = 1;
    while (r != 0) {
        i64 q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_x -= q * x;
        std::swap(old_x, x);
        old_y -= q * y;
        std::swap(old_y, y);
    }
    if (a < 0) old_x = -old_x;
    if (b < 0) old_y = -old_y;
    return {old_r, old_x, old_y};
}

std::optional<u64> mod_inverse(i64 a, u64 m) {
    if (m == 0) throw std::invalid_argument("mod_inverse: modulus zero");
    if (m == 1) return u64{0};
    i64 r = a % static_cast<i64>(m);
    if (r < 0) r += static_cast<i64>(m);
    auto e = ext_gcd(r, static_cast<i64>(m));
    if (e.g != 1) return std::nullopt;
    i64 v = e.x % static_cast<i64>(m);
    if (v < 0) v += static_cast<i64>(m);
    return static_cast<u64>(v);
}

namespace {

u64 mul_mod(u64 a, u64 b, u64 m) { return u64((u128)a * b % m); }

u64 pow_mod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // Witness set valid for all n < 2^64 (Sorenson-Webster).
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<u64> primes_up_to(u64 limit) {
    std::vector<u64> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

namespace {

constexpr u64 kTrialLimit = 1'000'000;

// Pollard rho with Brent cycle detection; deterministic seed sequence.
u64 pollard_rho(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        auto f = [n, c](u64 x) { return (mul_mod(x, x, n) + c) % n; };
        u64 x = 2, y = 2, d = 1;
        u64 q = 1;
        int step = 0;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            u64 diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            q = mul_mod(q, diff, n);
            if (++step % 64 == 0) {
                d = std::gcd(q, n);
                q = 1;
            }
        }
        if (d == 1) d = std::gcd(q, n);
        if (d != 1 && d != n) return d;
        // cycle degenerated, retry with next c
    }
}

void factor_rec(u64 n, std::vector<u64>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    factor_rec(d, primes);
    factor_rec(n / d, primes);
}

}  // namespace

Factorization factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    f.value = n;
    u64 m = n;
    std::vector<u64> primes;
    for (u64 d = 2; d < kTrialLimit && d * d <= m; d += (d == 2 ? 1 : 2)) {
        while (m % d == 0) {
            primes.push_back(d);
            m /= d;
        }
    }
    if (m > 1) {
        if (m < kTrialLimit * kTrialLimit || is_prime(m)) {
            primes.push_back(m);
        } else {
            factor_rec(m, primes);
        }
    }
    std::sort(primes.begin(), primes.end());
    for (u64 p : primes) {
        if (!f.factors.empty() && f.factors.back().first == p)
            ++f.factors.back().second;
        else
            f.factors.emplace_back(p, 1u);
    }
    return f;
}

std::vector<u64> divisors(const Factorization& f) {
    std::vector<u64> out{1};
    for (auto [p, e] : f.factors) {
        size_t base = out.size();
        u64 pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

u64 sigma0(const Factorization& f) {
    u64 r = 1;
    for (auto [p, e] : f.factors) r *= e + 1;
    return r;
}

ExactRational sigma_minus1(const Factorization& f) {
    // sigma_1(n)/n with sigma_1 accumulated in 128 bits.
    u128 s = 1;
    for (auto [p, e] : f.factors) {
        u128 term = 1, pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            term += pk;
        }
        s *= term;
    }
    u128 num = s, den = f.value;
    u128 g = num, b = den;
    while (b) {
        u128 t = g % b;
        g = b;
        b = t;
    }
    num /= g;
    den /= g;
    if (num > ~u64{0}) throw std::overflow_error("sigma_minus1: numerator overflow");
    return {u64(num), u64(den)};
}

u64 euler_phi(const Factorization& f) {
    u64 r = f.value;
    for (auto [p, e] : f.factors) r -= r / p;
    return r;
}

int mobius(const Factorization& f) {
    for (auto [p, e] : f.factors)
        if (e > 1) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

unsigned omega(const Factorization& f) {
    return static_cast<unsigned>(f.factors.size());
}

u64 floor_sqrt(u64 n) {
    if (n == 0) return 0;
    u64 s = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (s > 0 && (u128)s * s > n) --s;
    while ((u128)(s + 1) * (s + 1) <= n) ++s;
    return s;
}

}  // namespace matcount
