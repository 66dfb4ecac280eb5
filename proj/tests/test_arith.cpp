#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "matcount/arith.hpp"

using namespace matcount;

TEST_CASE("gcd basics") {
    CHECK(gcd(12, 18) == 6);
    CHECK(gcd(0, 7) == 7);
    CHECK(gcd(-4, 6) == 2);
    CHECK(gcd(0, 0) == 0);
    CHECK(gcd(-5, -15) == 5);
}

TEST_CASE("ext_gcd satisfies the Bezout identity with small coefficients") {
    auto e = ext_gcd(3, 5);
    CHECK(e.g == 1);
    CHECK(3 * e.x + 5 * e.y == 1);
    e = ext_gcd(4, 0);
    CHECK(e.g == 4);
    CHECK(e.x == 1);
    CHECK(e.y == 0);
    e = ext_gcd(6, 9);
    CHECK(e.g == 3);
    CHECK(6 * e.x + 9 * e.y == 3);
    CHECK_THROWS_AS(ext_gcd(0, 0), std::invalid_argument);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 5000; ++i) {
        i64 a = i64(rng() % 2001) - 1000;
        i64 b = i64(rng() % 2001) - 1000;
        if (a == 0 && b == 0) continue;
        auto r = ext_gcd(a, b);
        CHECK(r.g == gcd(a, b));
        CHECK(a * r.x + b * r.y == r.g);
        if (a != 0 && b != 0) {
            i64 bound = std::max(i64(1), (b < 0 ? -b : b) / (2 * r.g));
            CHECK((r.x < 0 ? -r.x : r.x) <= bound);
        }
    }
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(3, 10) == 7u);
    CHECK(!mod_inverse(4, 8).has_value());
    CHECK(mod_inverse(-1, 5) == 4u);
    CHECK(mod_inverse(123, 1) == 0u);
    for (u64 m = 2; m <= 50; ++m) {
        for (i64 a = -60; a <= 60; ++a) {
            auto v = mod_inverse(a, m);
            if (gcd(a, i64(m)) == 1) {
                REQUIRE(v.has_value());
                i64 am = ((a % i64(m)) + i64(m)) % i64(m);
                CHECK(u64(am) * *v % m == 1 % m);
            } else {
                CHECK(!v.has_value());
            }
        }
    }
}

TEST_CASE("factorize") {
    auto f = factorize(12);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::pair<u64, unsigned>{2, 2});
    CHECK(f.factors[1] == std::pair<u64, unsigned>{3, 1});
    CHECK(factorize(1).factors.empty());
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);

    // 1e9+7: confirm primality by independent trial division
    u64 p = 1'000'000'007;
    bool prime = true;
    for (u64 d = 2; d * d <= p; ++d)
        if (p % d == 0) prime = false;
    REQUIRE(prime);
    auto fp = factorize(p);
    REQUIRE(fp.factors.size() == 1);
    CHECK(fp.factors[0] == std::pair<u64, unsigned>{p, 1});

    // semiprime beyond the trial-division limit
    u64 q1 = 1'000'003, q2 = 1'000'033;
    auto fs = factorize(q1 * q2);
    REQUIRE(fs.factors.size() == 2);
    CHECK(fs.factors[0].first == q1);
    CHECK(fs.factors[1].first == q2);

    // reconstruct value from factors, random sample
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        u64 n = rng() % 1'000'000 + 1;
        auto g = factorize(n);
        u64 prod = 1;
        u64 last = 0;
        for (auto [pr, e] : g.factors) {
            CHECK(pr > last);
            last = pr;
            CHECK(e >= 1);
            for (unsigned k = 0; k < e; ++k) prod *= pr;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("divisors complete and sorted vs trial division") {
    CHECK(divisors(factorize(12)) == std::vector<u64>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(factorize(1)) == std::vector<u64>{1});
    CHECK(divisors(factorize(97)) == std::vector<u64>{1, 97});
    for (u64 n = 1; n <= 10'000; n += 7) {
        std::vector<u64> ref;
        for (u64 d = 1; d <= n; ++d)
            if (n % d == 0) ref.push_back(d);
        CHECK(divisors(factorize(n)) == ref);
    }
}

TEST_CASE("sigma0 and sigma_minus1") {
    CHECK(sigma0(factorize(12)) == 6);
    CHECK(sigma0(factorize(1)) == 1);
    CHECK(sigma0(factorize(49)) == 3);
    auto s = sigma_minus1(factorize(6));
    CHECK(s.num == 2);
    CHECK(s.den == 1);
    s = sigma_minus1(factorize(1));
    CHECK(s.num == 1);
    CHECK(s.den == 1);
    s = sigma_minus1(factorize(4));
    CHECK(s.num == 7);
    CHECK(s.den == 4);
    // sigma_minus1(n) * n == sum of divisors, exactly
    for (u64 n = 1; n <= 10'000; ++n) {
        auto f = factorize(n);
        auto r = sigma_minus1(f);
        CHECK(gcd(i64(r.num), i64(r.den)) == 1);
        u64 sum = 0;
        for (u64 d : divisors(f)) sum += d;
        CHECK(r.num * (n / r.den) == sum);
        CHECK(n % r.den == 0);
    }
}

TEST_CASE("phi, mu, omega and their divisor-sum identities") {
    CHECK(euler_phi(factorize(12)) == 4);
    CHECK(mobius(factorize(12)) == 0);
    CHECK(omega(factorize(12)) == 2);
    CHECK(euler_phi(factorize(1)) == 1);
    CHECK(mobius(factorize(1)) == 1);
    CHECK(omega(factorize(1)) == 0);
    CHECK(euler_phi(factorize(13)) == 12);
    CHECK(mobius(factorize(13)) == -1);
    CHECK(omega(factorize(13)) == 1);

    for (u64 n = 1; n <= 10'000; ++n) {
        i64 phi_sum = 0, mu_sum = 0;
        for (u64 d : divisors(factorize(n))) {
            phi_sum += i64(euler_phi(factorize(d)));
            mu_sum += mobius(factorize(d));
        }
        CHECK(phi_sum == i64(n));
        CHECK(mu_sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("floor_sqrt exact over random 63-bit inputs") {
    CHECK(floor_sqrt(0) == 0);
    CHECK(floor_sqrt(5) == 2);
    CHECK(floor_sqrt(49) == 7);
    u64 big = (u64(1) << 62) - 1;
    u64 v = floor_sqrt(big);
    CHECK((u128)v * v <= big);
    CHECK((u128)(v + 1) * (v + 1) > big);

    std::mt19937_64 rng(42);
    for (int i = 0; i < 1'000'000; ++i) {
        u64 n = rng() >> 1;  // 63-bit
        u64 s = floor_sqrt(n);
        REQUIRE((u128)s * s <= n);
        REQUIRE((u128)(s + 1) * (s + 1) > n);
    }
}

TEST_CASE("is_prime and primes_up_to") {
    CHECK(is_prime(2));
    CHECK(!is_prime(1));
    CHECK(!is_prime(0));
    CHECK(primes_up_to(20) == std::vector<u64>{2, 3, 5, 7, 11, 13, 17, 19});
    auto sieve = primes_up_to(10'000);
    size_t idx = 0;
    for (u64 n = 0; n <= 10'000; ++n) {
        bool p = idx < sieve.size() && sieve[idx] == n;
        if (p) ++idx;
        CHECK(is_prime(n) == p);
    }
    // strong pseudoprime traps and large inputs
    CHECK(!is_prime(3215031751ull));
    CHECK(is_prime(18446744073709551557ull));  // largest 64-bit prime
    CHECK(!is_prime(4294967291ull * 4294967291ull));  // square of a prime
}
